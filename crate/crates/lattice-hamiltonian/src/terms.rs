use quoct_algebra::operator::{string_embed, sum};
use quoct_algebra::{annihilator, casimir, charge_op, creator, number_op, Color, QuoctOperator, SiteKind, C64};

use crate::LatticeParams;

/// Hamiltonian split into the pieces that are exponentiated separately.
#[derive(Clone, Debug)]
pub struct HamiltonianTerms {
    pub kinetic: QuoctOperator,
    pub mass: QuoctOperator,
    pub chem: QuoctOperator,
    pub electric: QuoctOperator,
    pub penalty: QuoctOperator,
    pub total: QuoctOperator,
}

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

pub fn build_kinetic(p: &LatticeParams) -> QuoctOperator {
    let ns = p.n_sites();
    let mut acc = QuoctOperator::zeros(ns);
    for c in Color::ALL {
        let cd = creator(c);
        let cc = annihilator(c);
        for n in 0..ns - 1 {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            // string_embed(x, n) · string_embed(y, n+1) = (x P)_n y_{n+1}
            let pair_create = string_embed(&cd, n, ns).unwrap().dot(&string_embed(&cd, n + 1, ns).unwrap());
            let pair_annih = string_embed(&cc, n, ns).unwrap().dot(&string_embed(&cc, n + 1, ns).unwrap());
            acc = &acc + &(&pair_create - &pair_annih).scale_re(sign);
        }
    }
    acc.scale_re(0.5 / p.a).pruned(0.0).with_fermionic(false)
}

pub fn total_number_op(n_sites: usize) -> QuoctOperator {
    let ops: Vec<_> = (0..n_sites).map(|n| number_op().embed(n, n_sites).unwrap()).collect();
    sum(&ops).unwrap()
}

fn staggered_number_op(n_sites: usize) -> QuoctOperator {
    let ops: Vec<_> = (0..n_sites)
        .map(|n| {
            let s = if n % 2 == 0 { 1.0 } else { -1.0 };
            number_op().embed(n, n_sites).unwrap().scale_re(s)
        })
        .collect();
    sum(&ops).unwrap()
}

/// (mass, chemical-potential) terms, both diagonal.
pub fn build_mass_chem(p: &LatticeParams) -> (QuoctOperator, QuoctOperator) {
    let ns = p.n_sites();
    let mass = total_number_op(ns).scale_re(p.m).pruned(0.0);
    let chem = staggered_number_op(ns).scale_re(p.mu).pruned(0.0);
    (mass, chem)
}

/// Q̃^a on every staggered site: `out[n][a-1]`.
pub fn site_charges(n_sites: usize) -> Vec<Vec<QuoctOperator>> {
    (0..n_sites)
        .map(|n| (1..=8).map(|a| charge_op(a, SiteKind::of(n)).unwrap().embed(n, n_sites).unwrap()).collect())
        .collect()
}

/// Number of (m, m') charge-pairing site pairs in the electric term.
pub fn charge_pair_count(l: usize) -> usize {
    let k = 2 * l - 1;
    k * (k - 1) / 2
}

pub fn build_electric(p: &LatticeParams) -> QuoctOperator {
    let ns = p.n_sites();
    let coef = p.a * p.g * p.g;
    if coef == 0.0 {
        return QuoctOperator::zeros(ns);
    }
    let last = ns - 2;
    let mut acc = QuoctOperator::zeros(ns);
    for n in 0..=last {
        let w = (ns - 1 - n) as f64;
        acc = &acc + &casimir().embed(n, ns).unwrap().scale_re(0.5 * coef * w);
    }
    if last >= 1 {
        let q = site_charges(ns);
        for m in 0..=last {
            for mp in m + 1..=last {
                let w = (ns - 1 - mp) as f64;
                for a in 0..8 {
                    acc = &acc + &q[m][a].dot(&q[mp][a]).scale_re(coef * w);
                }
            }
        }
    }
    acc.pruned(1e-15)
}

/// Σ_n Q̃^a_n for generator `a` in 1..=8.
pub fn total_charge(n_sites: usize, a: usize) -> QuoctOperator {
    let ops: Vec<_> = (0..n_sites).map(|n| charge_op(a, SiteKind::of(n)).unwrap().embed(n, n_sites).unwrap()).collect();
    sum(&ops).unwrap().pruned(0.0)
}

/// Σ_a (Σ_n Q̃^a_n)².
pub fn total_casimir(n_sites: usize) -> QuoctOperator {
    let mut acc = QuoctOperator::zeros(n_sites);
    for a in 1..=8 {
        let q = total_charge(n_sites, a);
        acc = &acc + &q.dot(&q);
    }
    acc.pruned(1e-14)
}

pub fn build_penalty(p: &LatticeParams) -> QuoctOperator {
    if p.penalty_weight == 0.0 {
        return QuoctOperator::zeros(p.n_sites());
    }
    total_casimir(p.n_sites()).scale_re(p.penalty_weight)
}

pub fn build_full(p: &LatticeParams) -> HamiltonianTerms {
    let kinetic = build_kinetic(p);
    let (mass, chem) = build_mass_chem(p);
    let electric = build_electric(p);
    let penalty = build_penalty(p);
    let total = sum([&kinetic, &mass, &chem, &electric, &penalty]).unwrap().pruned(1e-15);
    HamiltonianTerms { kinetic, mass, chem, electric, penalty, total }
}

/// (1/3)(quarks on even sites - antiquarks on odd sites).
pub fn baryon_number_op(l: usize) -> QuoctOperator {
    staggered_number_op(2 * l).scale(re(1.0 / 3.0))
}
