use std::sync::OnceLock;

use crate::basis::{Color, QuoctBasis};
use crate::gellmann::GellMannSet;
use crate::operator::QuoctOperator;
use crate::{AlgebraError, C64};

/// Quark (even) or antiquark (odd) staggered site.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SiteKind {
    Even,
    Odd,
}

impl SiteKind {
    pub fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            SiteKind::Even
        } else {
            SiteKind::Odd
        }
    }
}

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

pub fn gell_mann() -> &'static GellMannSet {
    static SET: OnceLock<GellMannSet> = OnceLock::new();
    SET.get_or_init(GellMannSet::new)
}

/// c̃_c on one site. Removing color c picks up a minus sign in exactly one
/// of the two diquark transitions, fixed by the |gb>, |rb>, |rg> ordering.
pub fn annihilator(color: Color) -> QuoctOperator {
    // (target, source, sign) in storage indices: ∅ r g b gb rb rg rgb
    let entries: [(usize, usize, f64); 4] = match color {
        Color::R => [(0, 1, 1.0), (2, 6, 1.0), (3, 5, -1.0), (4, 7, 1.0)],
        Color::G => [(0, 2, 1.0), (1, 6, -1.0), (3, 4, 1.0), (5, 7, 1.0)],
        Color::B => [(0, 3, 1.0), (1, 5, 1.0), (2, 4, -1.0), (6, 7, 1.0)],
    };
    let trip: Vec<_> = entries.iter().map(|&(i, j, s)| (i, j, re(s))).collect();
    QuoctOperator::from_triplets(1, &trip, true)
}

pub fn creator(color: Color) -> QuoctOperator {
    annihilator(color).adjoint()
}

pub fn parity() -> QuoctOperator {
    let b = QuoctBasis::default();
    let d: Vec<_> = (0..8).map(|i| re(if b.fermion_number(i) % 2 == 0 { 1.0 } else { -1.0 })).collect();
    QuoctOperator::from_diagonal(1, &d)
}

pub fn number_op() -> QuoctOperator {
    let b = QuoctBasis::default();
    let d: Vec<_> = (0..8).map(|i| re(b.fermion_number(i) as f64)).collect();
    QuoctOperator::from_diagonal(1, &d)
}

/// Q̃^a for generator `a` in 1..=8: T^a on single occupations and -(T^a)^*
/// on double occupations for quark sites, blocks exchanged on antiquark sites.
pub fn charge_op(a: usize, kind: SiteKind) -> Result<QuoctOperator, AlgebraError> {
    if !(1..=8).contains(&a) {
        return Err(AlgebraError::InvalidGenerator(a));
    }
    let gm = gell_mann();
    let t = gm.t[a - 1].clone();
    let tb = gm.tbar(a - 1);
    let (single, double) = match kind {
        SiteKind::Even => (t, tb),
        SiteKind::Odd => (tb, t),
    };
    let mut trip = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if single[[i, j]].norm() > 0.0 {
                trip.push((1 + i, 1 + j, single[[i, j]]));
            }
            if double[[i, j]].norm() > 0.0 {
                trip.push((4 + i, 4 + j, double[[i, j]]));
            }
        }
    }
    Ok(QuoctOperator::from_triplets(1, &trip, false))
}

pub fn casimir() -> QuoctOperator {
    let d: Vec<_> = (0..8).map(|i| re(if i == 0 || i == 7 { 0.0 } else { 4.0 / 3.0 })).collect();
    QuoctOperator::from_diagonal(1, &d)
}
