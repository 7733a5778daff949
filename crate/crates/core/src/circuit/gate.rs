use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::state::{Amplitude, FullState};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GateKind {
    H,
    X,
    #[serde(rename = "CNOT")]
    Cnot,
    #[serde(rename = "MCX")]
    Mcx,
    /// Single-qubit phase `diag(1, e^{i angle})`; only produced when
    /// decomposing multi-controlled gates.
    #[serde(rename = "P")]
    Phase,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Gate {
    pub kind: GateKind,
    pub controls: Vec<usize>,
    pub targets: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angle: Option<f64>,
}

impl Gate {
    pub fn h(target: usize) -> Self {
        Self {
            kind: GateKind::H,
            controls: vec![],
            targets: vec![target],
            angle: None,
        }
    }

    pub fn x(target: usize) -> Self {
        Self {
            kind: GateKind::X,
            controls: vec![],
            targets: vec![target],
            angle: None,
        }
    }

    pub fn cnot(control: usize, target: usize) -> Self {
        Self {
            kind: GateKind::Cnot,
            controls: vec![control],
            targets: vec![target],
            angle: None,
        }
    }

    pub fn phase(target: usize, angle: f64) -> Self {
        Self {
            kind: GateKind::Phase,
            controls: vec![],
            targets: vec![target],
            angle: Some(angle),
        }
    }

    /// X with any number of controls: plain X, CNOT or MCX.
    pub fn controlled_x(controls: &[usize], target: usize) -> Self {
        match controls {
            [] => Self::x(target),
            [c] => Self::cnot(*c, target),
            _ => Self {
                kind: GateKind::Mcx,
                controls: controls.to_vec(),
                targets: vec![target],
                angle: None,
            },
        }
    }

    fn validate(&self, width: usize) -> Result<()> {
        for &q in self.controls.iter().chain(&self.targets) {
            if q >= width {
                return Err(Error::QubitOutOfRange { qubit: q, width });
            }
        }
        if let Some(&q) = self.controls.iter().find(|c| self.targets.contains(c)) {
            return Err(Error::OverlappingQubits(q));
        }
        let arity_ok = match self.kind {
            GateKind::H | GateKind::X => self.controls.is_empty(),
            GateKind::Phase => self.controls.is_empty() && self.angle.is_some_and(f64::is_finite),
            GateKind::Cnot => self.controls.len() == 1,
            GateKind::Mcx => self.controls.len() >= 2,
        };
        if !arity_ok || self.targets.is_empty() {
            return Err(Error::invalid(format!("malformed {:?} gate", self.kind)));
        }
        Ok(())
    }

    /// Applies the gate in place to a raw amplitude vector where qubit `q` is
    /// bit `q` of the basis index.
    pub(crate) fn apply(&self, amps: &mut [Amplitude]) {
        let control_mask = self.controls.iter().fold(0usize, |m, &c| m | (1 << c));
        for &t in &self.targets {
            let bit = 1usize << t;
            match self.kind {
                GateKind::H => {
                    for i in (0..amps.len()).filter(|i| i & bit == 0) {
                        let (a, b) = (amps[i], amps[i | bit]);
                        amps[i] = (a + b) * FRAC_1_SQRT_2;
                        amps[i | bit] = (a - b) * FRAC_1_SQRT_2;
                    }
                }
                GateKind::X | GateKind::Cnot | GateKind::Mcx => {
                    for i in (0..amps.len()).filter(|i| i & bit == 0 && i & control_mask == control_mask) {
                        amps.swap(i, i | bit);
                    }
                }
                GateKind::Phase => {
                    let w = Complex64::from_polar(1.0, self.angle.unwrap_or(0.0));
                    for (i, a) in amps.iter_mut().enumerate() {
                        if i & bit != 0 {
                            *a *= w;
                        }
                    }
                }
            }
        }
    }
}

/// Ordered gate list over `width` qubits.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Circuit {
    width: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            gates: Vec::new(),
        }
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.width)?;
        self.gates.push(gate);
        Ok(())
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = Gate>) -> Result<()> {
        for g in gates {
            self.push(g)?;
        }
        Ok(())
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// JSON list of `{kind, controls, targets}` objects.
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.gates)?)
    }
}

/// Applies the circuit's gates in order, returning the new state.
pub fn execute(circuit: &Circuit, state: &FullState) -> Result<FullState> {
    if circuit.width() != state.width() {
        return Err(Error::DimensionMismatch {
            expected: state.width(),
            found: circuit.width(),
        });
    }
    let mut out = state.clone();
    let amps = out.amplitudes_mut();
    for gate in circuit.gates() {
        gate.apply(amps);
    }
    Ok(out)
}
