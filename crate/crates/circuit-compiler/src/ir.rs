use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::CompileError;

/// Qubit slot inside a quoct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Slot {
    E,
    N,
    M,
}

impl Slot {
    pub const ALL: [Slot; 3] = [Slot::E, Slot::N, Slot::M];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(k: usize) -> Self {
        Self::ALL[k]
    }

    fn letter(self) -> char {
        ['e', 'n', 'm'][self.index()]
    }

    fn parse(c: char) -> Option<Self> {
        Some(match c {
            'e' => Slot::E,
            'n' => Slot::N,
            'm' => Slot::M,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GateName {
    X,
    H,
    /// diag(1, e^{iα})
    Z,
    Cnot,
    Swap,
    Cz,
    Ccz,
    /// cos(α/2) − i sin(α/2)·SWAP_en·Z_m
    RotSwap,
    /// −1 on |10m⟩ ⊗ |1nm⟩ (first quoct e=1, n=0; second e=1).
    CantiCz,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Gate {
    pub name: GateName,
    pub quoct: usize,
    /// Second quoct of an inter-quoct gate.
    pub partner: Option<usize>,
    pub slots: Vec<Slot>,
    pub angle: Option<f64>,
}

impl Gate {
    /// Resource key: name plus slots, no angle.
    pub fn label(&self) -> String {
        let s: String = self.slots.iter().map(|s| s.letter()).collect();
        match self.name {
            GateName::X => format!("X_{s}"),
            GateName::H => format!("H_{s}"),
            GateName::Z => format!("Z_{s}"),
            GateName::Cnot => format!("CNOT_{s}"),
            GateName::Swap => format!("SWAP_{s}"),
            GateName::Cz => format!("CZ_{s}"),
            GateName::Ccz => "CCZ".into(),
            GateName::RotSwap => "RSWAP_en".into(),
            GateName::CantiCz => "CantiCZ".into(),
        }
    }

    pub fn is_native(&self) -> bool {
        use GateName::*;
        use Slot::*;
        let s = self.slots.as_slice();
        let intra = self.partner.is_none();
        match self.name {
            X | H => intra && matches!(s, [E] | [N]),
            Z => intra && s.len() == 1 && self.angle.is_some(),
            Cnot => intra && matches!(s, [E, N] | [N, E]),
            Swap => intra && matches!(s, [E, N] | [E, M] | [N, M]),
            Cz => intra && matches!(s, [E, M]),
            Ccz => intra && s.is_empty(),
            RotSwap => intra && s.is_empty() && self.angle.is_some(),
            CantiCz => self.partner.is_some_and(|p| p != self.quoct) && s.is_empty(),
        }
    }

    /// Self-inverse gates cancel in adjacent pairs.
    pub fn is_involution(&self) -> bool {
        !matches!(self.name, GateName::Z | GateName::RotSwap)
    }

    pub fn quocts(&self) -> Vec<usize> {
        std::iter::once(self.quoct).chain(self.partner).collect()
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.label(), self.quoct)?;
        if let Some(p) = self.partner {
            write!(f, ",{p}")?;
        }
        if let Some(a) = self.angle {
            write!(f, " {a:?}")?;
        }
        Ok(())
    }
}

impl FromStr for Gate {
    type Err = CompileError;

    fn from_str(line: &str) -> Result<Self, Self::Err> {
        let bad = || CompileError::Parse(line.to_string());
        let mut it = line.split_whitespace();
        let label = it.next().ok_or_else(bad)?;
        let targets = it.next().ok_or_else(bad)?;
        let angle = it.next().map(|a| a.parse::<f64>().map_err(|_| bad())).transpose()?;
        if it.next().is_some() {
            return Err(bad());
        }
        let mut q = targets.split(',').map(|t| t.parse::<usize>().map_err(|_| bad()));
        let quoct = q.next().ok_or_else(bad)??;
        let partner = q.next().transpose()?;
        let (head, tail) = label.split_once('_').unwrap_or((label, ""));
        let name = match (head, tail) {
            ("X", _) => GateName::X,
            ("H", _) => GateName::H,
            ("Z", _) => GateName::Z,
            ("CNOT", _) => GateName::Cnot,
            ("SWAP", _) => GateName::Swap,
            ("CZ", _) => GateName::Cz,
            ("CCZ", "") => GateName::Ccz,
            ("RSWAP", "en") => GateName::RotSwap,
            ("CantiCZ", "") => GateName::CantiCz,
            _ => return Err(bad()),
        };
        let slots = if matches!(name, GateName::Ccz | GateName::RotSwap | GateName::CantiCz) {
            Vec::new()
        } else {
            tail.chars().map(|c| Slot::parse(c).ok_or_else(bad)).collect::<Result<_, _>>()?
        };
        let g = Gate { name, quoct, partner, slots, angle };
        if g.is_native() {
            Ok(g)
        } else {
            Err(bad())
        }
    }
}

/// Ordered native gate list (time order) over `n_quocts` quocts, with the
/// global phase the gates drop.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Circuit {
    pub n_quocts: usize,
    pub gates: Vec<Gate>,
    pub global_phase: f64,
}

impl Circuit {
    pub fn new(n_quocts: usize) -> Self {
        Self { n_quocts, gates: Vec::new(), global_phase: 0.0 }
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn append(&mut self, other: &Circuit) {
        assert_eq!(self.n_quocts, other.n_quocts);
        self.gates.extend(other.gates.iter().cloned());
        self.global_phase += other.global_phase;
    }

    /// Gate counts keyed by label.
    pub fn histogram(&self) -> std::collections::BTreeMap<String, usize> {
        let mut h = std::collections::BTreeMap::new();
        for g in &self.gates {
            *h.entry(g.label()).or_default() += 1;
        }
        h
    }

    /// One gate per line after a `quocts N phase φ` header.
    pub fn to_text(&self) -> String {
        let mut s = format!("quocts {} phase {:?}\n", self.n_quocts, self.global_phase);
        for g in &self.gates {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self, CompileError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| CompileError::Parse(String::new()))?;
        let h: Vec<&str> = header.split_whitespace().collect();
        let (n_quocts, global_phase) = match h.as_slice() {
            ["quocts", n, "phase", p] => (
                n.parse().map_err(|_| CompileError::Parse(header.into()))?,
                p.parse().map_err(|_| CompileError::Parse(header.into()))?,
            ),
            _ => return Err(CompileError::Parse(header.into())),
        };
        let gates = lines.map(str::parse).collect::<Result<Vec<Gate>, _>>()?;
        if let Some(g) = gates.iter().find(|g| g.quocts().iter().any(|&q| q >= n_quocts)) {
            return Err(CompileError::Parse(g.to_string()));
        }
        Ok(Self { n_quocts, gates, global_phase })
    }
}
