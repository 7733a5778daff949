//! Ancilla-free expansion of multi-controlled X into `{H, X, CNOT, P(θ)}`.
//!
//! `C^c X = H_t · C^c Z · H_t` and the multi-controlled phase over a qubit
//! set splits recursively: with `n` the last control and `t` the target,
//!
//! ```text
//! C^k P(θ) = CP(θ/2)[n,t] · C^{k-1}X[rest→n] · CP(-θ/2)[n,t] · C^{k-1}X[rest→n] · C^{k-1}P(θ/2)[rest,t]
//! ```
//!
//! and `CP(θ)[a,b] = P(θ/2)_a P(θ/2)_b CNOT(a,b) P(-θ/2)_b CNOT(a,b)`.
//! No ancillas are used, so the cost grows roughly threefold per extra
//! control.

use std::f64::consts::PI;

use super::gate::Gate;

/// Elementary gates implementing `controlled_x(controls, target)`.
pub fn decompose_mcx(controls: &[usize], target: usize) -> Vec<Gate> {
    let mut out = Vec::new();
    push_mcx(&mut out, controls, target);
    out
}

/// Number of elementary gates [`decompose_mcx`] emits for `c` controls.
pub fn mcx_elementary_cost(controls: usize) -> usize {
    match controls {
        0 | 1 => 1,
        c => 2 + phase_cost(c + 1),
    }
}

fn phase_cost(qubits: usize) -> usize {
    match qubits {
        0 => 0,
        1 => 1,
        2 => 5,
        k => 10 + 2 * mcx_elementary_cost(k - 2) + phase_cost(k - 1),
    }
}

fn push_mcx(out: &mut Vec<Gate>, controls: &[usize], target: usize) {
    if controls.len() < 2 {
        out.push(Gate::controlled_x(controls, target));
        return;
    }
    let mut qubits = controls.to_vec();
    qubits.push(target);
    out.push(Gate::h(target));
    push_phase(out, &qubits, PI);
    out.push(Gate::h(target));
}

/// Phase `e^{iθ}` on the basis states where every qubit in `qubits` is 1.
fn push_phase(out: &mut Vec<Gate>, qubits: &[usize], theta: f64) {
    match qubits {
        [] => {}
        [q] => out.push(Gate::phase(*q, theta)),
        [a, b] => push_cphase(out, *a, *b, theta),
        _ => {
            let k = qubits.len();
            let (t, n) = (qubits[k - 1], qubits[k - 2]);
            let rest = &qubits[..k - 2];
            push_cphase(out, n, t, theta / 2.0);
            push_mcx(out, rest, n);
            push_cphase(out, n, t, -theta / 2.0);
            push_mcx(out, rest, n);
            let mut reduced = rest.to_vec();
            reduced.push(t);
            push_phase(out, &reduced, theta / 2.0);
        }
    }
}

fn push_cphase(out: &mut Vec<Gate>, a: usize, b: usize, theta: f64) {
    out.extend([
        Gate::phase(a, theta / 2.0),
        Gate::phase(b, theta / 2.0),
        Gate::cnot(a, b),
        Gate::phase(b, -theta / 2.0),
        Gate::cnot(a, b),
    ]);
}
