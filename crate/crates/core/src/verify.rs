//! Verification harness: every closed form is cross-checked against the
//! exterior-algebra oracle and against the structural identities it relies
//! on.
//!
//! Each suite returns a [`SuiteReport`] with the number of checks performed
//! and a description of every failure. Grids run in parallel; randomized
//! suites draw from a seeded generator so runs are reproducible.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::exactpoly::{LaurentWindow, RingElement, Window};
use crate::fermion_oracle::{SchubertKind, Var, WedgeElement, WedgeSeries};
use crate::partitions::{binomial, enumerate_box, partitions_of, Partition};
use crate::schubert_ops::{
    act_elementary, act_matrix, action_first_form, action_second_form, gamma, gamma_star,
    GammaVariant, GlMatrix,
};
use crate::symfunc::{parse_element, project, project_series, straighten, HSequence, SchurExpansion};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_r: usize,
    pub max_n: usize,
    pub max_deg: usize,
    /// Largest `i`, `j` in the unboxed grids.
    pub max_index: usize,
    pub seed: u64,
    pub lie_samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_r: 3,
            max_n: 6,
            max_deg: 6,
            max_index: 6,
            seed: 0x5eed_2024,
            lie_samples: 200,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    /// Records a check whose computation may fail with a domain error.
    fn check_result(&mut self, r: Result<bool>, msg: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, msg),
            Err(e) => self.check(false, || format!("{}: error {e}", msg())),
        }
    }

    fn absorb(&mut self, results: Vec<(bool, String)>) {
        for (ok, msg) in results {
            self.check(ok, || msg);
        }
    }
}

fn outcome(r: Result<bool>, label: String) -> (bool, String) {
    match r {
        Ok(ok) => (ok, label),
        Err(e) => (false, format!("{label}: error {e}")),
    }
}

/// Names accepted by [`run_suite`], in the order [`run_all`] runs them.
pub const SUITES: &[&str] = &[
    "partitions",
    "ring-axioms",
    "straightening",
    "two-forms",
    "oracle-grid",
    "lie-bracket",
    "structural-lemmas",
    "grading-support",
    "box-commutation",
    "vertex-operators",
    "worked-example",
];

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Option<SuiteReport> {
    let report = match name {
        "partitions" => partitions_suite(cfg),
        "ring-axioms" => ring_axioms_suite(cfg),
        "straightening" => straightening_suite(cfg),
        "two-forms" => two_forms_suite(cfg),
        "oracle-grid" => oracle_grid_suite(cfg),
        "lie-bracket" => lie_bracket_suite(cfg),
        "structural-lemmas" => structural_lemmas_suite(cfg),
        "grading-support" => grading_support_suite(cfg),
        "box-commutation" => box_commutation_suite(cfg),
        "vertex-operators" => vertex_operators_suite(cfg),
        "worked-example" => worked_example_suite(),
        _ => return None,
    };
    Some(report)
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .map(|s| run_suite(s, cfg).expect("known suite"))
        .collect()
}

fn sequences(max_r: usize) -> Vec<HSequence> {
    (0..=max_r + 1).map(HSequence::new).collect()
}

fn basis(r: usize, n: Option<usize>, lambda: &Partition) -> SchurExpansion {
    SchurExpansion::basis(r, n, lambda.clone()).expect("partition fits")
}

/// Partitions with at most `r` parts and weight at most `d`.
fn up_to_weight(r: usize, d: usize) -> Vec<Partition> {
    (0..=d).flat_map(|k| partitions_of(k, r)).collect()
}

/// `π_{r,n}` of the oracle's `δ(E_ij)[b]^r_λ`.
pub fn oracle_action(i: usize, j: usize, lambda: &Partition, r: usize, n: Option<usize>) -> Result<SchurExpansion> {
    let u = WedgeElement::basis(lambda, r)?.delta_elementary(i, j);
    let s = u.to_schur();
    match n {
        Some(n) => project(&s, n),
        None => Ok(s),
    }
}

pub fn partitions_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("partitions");
    for r in 0..=cfg.max_r + 2 {
        for c in 0..=cfg.max_n {
            let b = enumerate_box(r, c, None);
            rep.check(b.len() == binomial(r + c, r), || {
                format!("box {r}x{c} has {} partitions", b.len())
            });
            for lam in &b {
                for i in 1..=lam.length() {
                    let ok = lam
                        .remove_part(i)
                        .map(|mu| mu.fits_box(r.saturating_sub(1), c))
                        .unwrap_or(false);
                    rep.check(ok, || format!("remove_part({lam}, {i}) leaves the box"));
                }
                if let Ok(mu) = lam.add_ones(r) {
                    rep.check(mu.weight() == lam.weight() + r, || {
                        format!("add_ones({lam}, {r}) has the wrong weight")
                    });
                }
            }
        }
    }
    rep
}

fn random_element(rng: &mut ChaCha8Rng, arity: usize, max_exp: u32, terms: usize) -> RingElement {
    RingElement::from_terms(
        arity,
        (0..terms).map(|_| {
            let exps: Vec<u32> = (0..arity).map(|_| rng.gen_range(0..=max_exp)).collect();
            (exps, BigInt::from(rng.gen_range(-9i64..=9)))
        }),
    )
}

/// A random element homogeneous of degree `d` in `B_r`.
fn random_homogeneous(rng: &mut ChaCha8Rng, r: usize, d: usize) -> RingElement {
    // monomials of degree d are e_μ for partitions μ of d with parts <= r
    let monos: Vec<Vec<u32>> = partitions_of(d, d.max(1))
        .into_iter()
        .filter(|mu| mu.first() <= r)
        .map(|mu| {
            let mut exps = vec![0u32; r];
            for &p in mu.parts() {
                exps[p - 1] += 1;
            }
            exps
        })
        .collect();
    if monos.is_empty() {
        return RingElement::zero(r);
    }
    let k = rng.gen_range(1..=monos.len().min(3));
    RingElement::from_terms(
        r,
        monos
            .choose_multiple(rng, k)
            .map(|m| (m.clone(), BigInt::from(rng.gen_range(-5i64..=5)))),
    )
}

pub fn ring_axioms_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("ring-axioms");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for r in 1..=cfg.max_r {
        for _ in 0..20 {
            let a = random_element(&mut rng, r, 3, 4);
            let b = random_element(&mut rng, r, 3, 4);
            let c = random_element(&mut rng, r, 3, 4);
            rep.check(&(&a * &b) * &c == &a * &(&b * &c), || format!("associativity r={r}"));
            rep.check(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || format!("distributivity r={r}"));
            rep.check(&a * &b == &b * &a, || format!("commutativity r={r}"));
            rep.check(&(&a + &b) - &b == a, || format!("(a + b) - b = a, r={r}"));
        }
        for d1 in 0..=4 {
            for d2 in 0..=4 {
                let a = random_homogeneous(&mut rng, r, d1);
                let b = random_homogeneous(&mut rng, r, d2);
                let p = &a * &b;
                rep.check(p.is_zero() || p.homogeneous_degree() == Some(d1 + d2), || {
                    format!("grading {d1}+{d2}, r={r}")
                });
            }
        }
        let h = HSequence::new(r);
        let ok = h
            .generating_series(8)
            .and_then(|s| h.e_polynomial().mul(&s))
            .map(|p| (0..=8).all(|k| p.coeff(k, 0).map(|c| c.is_one() == (k == 0) && (k == 0 || c.is_zero())).unwrap_or(false)))
            .unwrap_or(false);
        rep.check(ok, || format!("E_r(z) / E_r(z) != 1 for r={r}"));
    }
    rep
}

pub fn straightening_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("straightening");
    let hs = sequences(cfg.max_r);
    for (r, h) in hs.iter().enumerate().take(cfg.max_r + 1) {
        for lam in up_to_weight(r, cfg.max_deg) {
            let ok = h
                .schur(&lam)
                .and_then(|d| straighten(&d, h))
                .map(|s| s == basis(r, None, &lam));
            rep.check_result(ok, || format!("straighten(Δ_{lam}) != {{{lam}: 1}}, r={r}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x11);
    for (r, h) in hs.iter().enumerate().take(cfg.max_r + 1).skip(1) {
        for n in r..=cfg.max_n {
            let top = r * (n - r);
            for _ in 0..6 {
                let d1 = rng.gen_range(0..=top);
                let d2 = rng.gen_range(0..=top - d1);
                let p = random_homogeneous(&mut rng, r, d1);
                let q = random_homogeneous(&mut rng, r, d2);
                let ok = (|| -> Result<bool> {
                    let direct = project(&straighten(&(&p * &q), h)?, n)?;
                    let pb = project(&straighten(&p, h)?, n)?.box_e_form(h)?;
                    let qb = project(&straighten(&q, h)?, n)?.box_e_form(h)?;
                    let via_box = project(&straighten(&(&pb * &qb), h)?, n)?;
                    Ok(direct == via_box)
                })();
                rep.check_result(ok, || format!("projection is not multiplicative, r={r} n={n}"));
            }
            for lam in enumerate_box(r, n - r, None) {
                let x = basis(r, None, &lam);
                let ok = project(&x, n).map(|y| y == basis(r, Some(n), &lam));
                rep.check_result(ok, || format!("project moved {lam} inside the box"));
                let ok = basis(r, Some(n), &lam)
                    .box_e_form(h)
                    .and_then(|e| straighten(&e, h))
                    .and_then(|s| project(&s, n))
                    .map(|y| y == basis(r, Some(n), &lam));
                rep.check_result(ok, || format!("box representative of {lam} does not round-trip"));
            }
        }
    }
    rep
}

pub fn two_forms_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("two-forms");
    let hs = sequences(cfg.max_r);
    let m = cfg.max_index as i64;
    let cells: Vec<(usize, Partition)> = (1..=cfg.max_r)
        .flat_map(|r| up_to_weight(r, cfg.max_deg).into_iter().map(move |l| (r, l)))
        .collect();
    let results: Vec<Vec<(bool, String)>> = cells
        .par_iter()
        .map(|(r, lam)| {
            let h = &hs[*r];
            let first = action_first_form(lam, h, m);
            let second = action_second_form(lam, h, m, -m);
            let (first, second) = match (first, second) {
                (Ok(a), Ok(b)) => (a, b),
                (a, b) => {
                    let e = a.err().or(b.err()).expect("one side failed");
                    return vec![(false, format!("r={r} λ={lam}: error {e}"))];
                }
            };
            let mut out = Vec::new();
            for i in 0..=m {
                for j in 0..=m {
                    let ok = match (first.coeff(i, -j), second.coeff(i, -j)) {
                        (Ok(a), Ok(b)) => a == b,
                        _ => false,
                    };
                    out.push((ok, format!("r={r} λ={lam} (i,j)=({i},{j}): forms differ")));
                }
            }
            out
        })
        .collect();
    results.into_iter().for_each(|v| rep.absorb(v));
    rep
}

/// Cells `(r, n, λ)` of the boxed grid.
fn box_cells(cfg: &VerifyConfig) -> Vec<(usize, usize, Partition)> {
    let mut cells = Vec::new();
    for r in 1..=cfg.max_r {
        for n in r..=cfg.max_n {
            for lam in enumerate_box(r, n - r, None) {
                cells.push((r, n, lam));
            }
        }
    }
    cells
}

pub fn oracle_grid_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("oracle-grid");
    let hs = sequences(cfg.max_r);
    let results: Vec<Vec<(bool, String)>> = box_cells(cfg)
        .par_iter()
        .map(|(r, n, lam)| {
            let (r, n) = (*r, *n);
            let x = basis(r, Some(n), lam);
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let ok = (|| -> Result<bool> {
                        Ok(act_elementary(i, j, &x, &hs[r])? == oracle_action(i, j, lam, r, Some(n))?)
                    })();
                    out.push(outcome(ok, format!("r={r} n={n} λ={lam} (i,j)=({i},{j}): closed form != oracle")));
                }
            }
            out
        })
        .collect();
    results.into_iter().for_each(|v| rep.absorb(v));
    rep
}

fn kron(a: usize, b: usize) -> BigInt {
    BigInt::from((a == b) as i64)
}

/// Both sides of `[E_ij, E_kl] = δ_jk E_il - δ_li E_kj` on `x` through the
/// closed forms, plus the matrix-commutator route.
fn lie_closed(i: usize, j: usize, k: usize, l: usize, x: &SchurExpansion, h: &HSequence) -> Result<bool> {
    let lhs = act_elementary(i, j, &act_elementary(k, l, x, h)?, h)?
        .sub(&act_elementary(k, l, &act_elementary(i, j, x, h)?, h)?)?;
    let rhs = act_elementary(i, l, x, h)?
        .scale(&kron(j, k))
        .sub(&act_elementary(k, j, x, h)?.scale(&kron(l, i)))?;
    let n = x.bound();
    let bracket = GlMatrix::elementary(n, i, j)?.bracket(&GlMatrix::elementary(n, k, l)?)?;
    let via_matrix = act_matrix(&bracket, x, h)?;
    Ok(lhs == rhs && lhs == via_matrix)
}

fn lie_oracle(i: usize, j: usize, k: usize, l: usize, u: &WedgeElement) -> bool {
    let lhs = u
        .delta_elementary(k, l)
        .delta_elementary(i, j)
        .sub(&u.delta_elementary(i, j).delta_elementary(k, l));
    let rhs = u
        .delta_elementary(i, l)
        .scale(&kron(j, k))
        .sub(&u.delta_elementary(k, j).scale(&kron(l, i)));
    lhs == rhs
}

pub fn lie_bracket_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("lie-bracket");
    let r = 3;
    let n = 6;
    let h = HSequence::new(r);
    let lambdas = enumerate_box(r, n - r, None);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x7e);
    let samples: Vec<(usize, usize, usize, usize, Partition)> = (0..cfg.lie_samples)
        .map(|_| {
            (
                rng.gen_range(0..=5),
                rng.gen_range(0..=5),
                rng.gen_range(0..=5),
                rng.gen_range(0..=5),
                lambdas.choose(&mut rng).expect("nonempty box").clone(),
            )
        })
        .collect();
    let results: Vec<Vec<(bool, String)>> = samples
        .par_iter()
        .map(|(i, j, k, l, lam)| {
            let (i, j, k, l) = (*i, *j, *k, *l);
            let tag = format!("(i,j,k,l)=({i},{j},{k},{l}) λ={lam}");
            let mut out = Vec::new();
            for bound in [Some(n), None] {
                let x = basis(r, bound, lam);
                out.push(outcome(lie_closed(i, j, k, l, &x, &h), format!("closed form n={bound:?} {tag}")));
            }
            let u = WedgeElement::basis(lam, r).expect("fits");
            out.push((lie_oracle(i, j, k, l, &u), format!("oracle {tag}")));
            out
        })
        .collect();
    results.into_iter().for_each(|v| rep.absorb(v));
    rep
}

fn random_wedge(rng: &mut ChaCha8Rng, degree: usize, max_index: usize) -> WedgeElement {
    let mut u = WedgeElement::zero(degree);
    for _ in 0..rng.gen_range(1..=3) {
        let mut pool: Vec<usize> = (0..=max_index).collect();
        pool.shuffle(rng);
        let m = WedgeElement::monomial(&pool[..degree]);
        u = u.add(&m.scale(&BigInt::from(rng.gen_range(-4i64..=4))));
    }
    u
}

fn geometric(order: i64) -> LaurentWindow {
    LaurentWindow::geometric_zw(0, order)
}

pub fn structural_lemmas_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("structural-lemmas");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xc1);

    // Clifford relations
    for degree in 0..=3 {
        for _ in 0..8 {
            let u = random_wedge(&mut rng, degree, 9);
            for i in 0..=8 {
                for j in 0..=8 {
                    let first = if degree == 0 {
                        WedgeElement::zero(0)
                    } else {
                        WedgeElement::b(i).wedge(&u.contract(j))
                    };
                    let second = WedgeElement::b(i).wedge(&u).contract(j);
                    let lhs = first.add(&second);
                    let rhs = u.scale(&kron(i, j));
                    rep.check(lhs == rhs, || format!("Clifford (i,j)=({i},{j}) u={u}"));
                }
            }
        }
    }

    let order = 6usize;
    for r in 1..=cfg.max_r {
        for lam in enumerate_box(r, 3, None) {
            let b = WedgeElement::basis(&lam, r).expect("fits");
            // b_0 ∧ σ̄_+(z)[b]^r_λ = z^r σ̄_-(z)([b]^r_{λ+(1^r)} ∧ b_0)
            let ok = (|| -> Result<bool> {
                let lhs = WedgeSeries::constant(b.clone())
                    .apply_sigma(SchubertKind::SigmaBarPlus, Var::Z, order)?
                    .map_linear(r + 1, |u| WedgeElement::b(0).wedge(u));
                let shifted = WedgeElement::basis(&lam.add_ones(r)?, r)?.wedge(&WedgeElement::b(0));
                let rhs = WedgeSeries::constant(shifted)
                    .apply_sigma(SchubertKind::SigmaBarMinus, Var::Z, order)?
                    .shift(r as i64, 0);
                Ok(lhs.window().z_max == Some(order as i64) && lhs.agrees_with(&rhs))
            })();
            rep.check_result(ok, || format!("b_0 ∧ σ̄_+ identity r={r} λ={lam}"));

            // σ̄_-(z)(β_0 ⌟ [b]^{r+1}_λ) = z^{-r} σ̄_+(z)[b]^r_λ
            let ok = (|| -> Result<bool> {
                let lhs = WedgeSeries::constant(WedgeElement::basis(&lam, r + 1)?.contract(0))
                    .apply_sigma(SchubertKind::SigmaBarMinus, Var::Z, order)?;
                let rhs = WedgeSeries::constant(b.clone())
                    .apply_sigma(SchubertKind::SigmaBarPlus, Var::Z, order)?
                    .shift(-(r as i64), 0);
                Ok(!lhs.is_zero() && lhs.agrees_with(&rhs))
            })();
            rep.check_result(ok, || format!("contraction by β_0 identity r={r} λ={lam}"));

            // σ_i [b]^r_λ corresponds to h_i Δ_λ(H_r)
            let h = HSequence::new(r);
            for i in 0..=4i64 {
                let ok = (|| -> Result<bool> {
                    let prod = &h.h(i) * &h.schur(&lam)?;
                    Ok(b.sigma(i).to_schur() == straighten(&prod, &h)?)
                })();
                rep.check_result(ok, || format!("module bridge σ_{i} r={r} λ={lam}"));
            }

            // Leibniz and contraction routes agree
            for i in 0..=6 {
                for j in 0..=6 {
                    rep.check(b.delta_elementary(i, j) == b.delta_leibniz(i, j), || {
                        format!("Leibniz route r={r} λ={lam} (i,j)=({i},{j})")
                    });
                }
            }
        }
    }

    let ord = 4usize;
    let sig = |u: WedgeElement| WedgeSeries::constant(u);
    // σ_-(w)σ_+(z)b_0 = i_{w,z}(w/(w-z)) σ_+(z)σ̄_-(w)b_0, and with σ_-(w)
    for bar in [SchubertKind::SigmaBarMinus, SchubertKind::SigmaMinus] {
        let ok = (|| -> Result<bool> {
            let lhs = sig(WedgeElement::b(0))
                .apply_sigma(SchubertKind::SigmaPlus, Var::Z, ord)?
                .apply_sigma(SchubertKind::SigmaMinus, Var::W, ord)?;
            let rhs = sig(WedgeElement::b(0))
                .apply_sigma(bar, Var::W, ord)?
                .apply_sigma(SchubertKind::SigmaPlus, Var::Z, ord)?
                .scalar_mul(&geometric(ord as i64))?;
            Ok(lhs.agrees_with(&rhs) && rhs.window().z_max == Some(ord as i64))
        })();
        rep.check_result(ok, || format!("commutation rule on b_0 with {bar:?}"));
    }

    for n in 0..=4usize {
        // σ_-(w) b_{n+i} = σ_i σ_-(w) b_n + w^{-(n+1)} σ_-(w) b_{i-1}
        for i in 1..=4usize {
            let ok = (|| -> Result<bool> {
                let lhs = sig(WedgeElement::b(n + i)).apply_sigma(SchubertKind::SigmaMinus, Var::W, 0)?;
                let rhs = sig(WedgeElement::b(n))
                    .apply_sigma(SchubertKind::SigmaMinus, Var::W, 0)?
                    .map_linear(1, |u| u.sigma(i as i64))
                    .add(
                        &sig(WedgeElement::b(i - 1))
                            .apply_sigma(SchubertKind::SigmaMinus, Var::W, 0)?
                            .shift(0, -(n as i64 + 1)),
                    );
                Ok(lhs.agrees_with(&rhs))
            })();
            rep.check_result(ok, || format!("shift rule n={n} i={i}"));
        }
        // σ_-(w)σ_+(z)b_n = σ_+(z)σ_-(w)b_n + w^{-n} i_{w,z}(z/(w-z)) σ_+(z)σ_-(w)b_0
        let ok = (|| -> Result<bool> {
            let pm = |u: WedgeElement| -> Result<WedgeSeries> {
                sig(u)
                    .apply_sigma(SchubertKind::SigmaMinus, Var::W, ord)?
                    .apply_sigma(SchubertKind::SigmaPlus, Var::Z, ord)
            };
            let lhs = sig(WedgeElement::b(n))
                .apply_sigma(SchubertKind::SigmaPlus, Var::Z, ord)?
                .apply_sigma(SchubertKind::SigmaMinus, Var::W, ord)?;
            let tail = geometric(ord as i64).sub(&LaurentWindow::constant(RingElement::one(0)));
            let rhs = pm(WedgeElement::b(n))?.add(&pm(WedgeElement::b(0))?.scalar_mul(&tail)?.shift(0, -(n as i64)));
            Ok(lhs.agrees_with(&rhs))
        })();
        rep.check_result(ok, || format!("commutation rule on b_{n}"));
    }

    // σ_-(w)σ_+(z)[b]^{r+1}_λ = i_{w,z}(w/(w-z)) σ_+(z)σ_-(w)[b]^{r+1}_λ
    for r in 0..cfg.max_r {
        for lam in enumerate_box(r, 3, None) {
            let ok = (|| -> Result<bool> {
                let b = WedgeElement::basis(&lam, r + 1)?;
                let lhs = sig(b.clone())
                    .apply_sigma(SchubertKind::SigmaPlus, Var::Z, ord)?
                    .apply_sigma(SchubertKind::SigmaMinus, Var::W, ord)?;
                let rhs = sig(b)
                    .apply_sigma(SchubertKind::SigmaMinus, Var::W, ord)?
                    .apply_sigma(SchubertKind::SigmaPlus, Var::Z, ord)?
                    .scalar_mul(&geometric(ord as i64))?;
                Ok(lhs.agrees_with(&rhs))
            })();
            rep.check_result(ok, || format!("commutation rule on [b]^{}_{lam}", r + 1));
        }
    }
    rep
}

pub fn grading_support_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("grading-support");
    let hs = sequences(cfg.max_r);
    let mut cells: Vec<(usize, Option<usize>, Partition)> = box_cells(cfg)
        .into_iter()
        .map(|(r, n, l)| (r, Some(n), l))
        .collect();
    for r in 1..=cfg.max_r {
        for lam in up_to_weight(r, cfg.max_deg) {
            cells.push((r, None, lam));
        }
    }
    let results: Vec<Vec<(bool, String)>> = cells
        .par_iter()
        .map(|(r, n, lam)| {
            let r = *r;
            let top = n.unwrap_or(cfg.max_index + 1);
            let support: Vec<usize> = (1..=r).map(|k| lam.part(k) + r - k).collect();
            let x = basis(r, *n, lam);
            let mut out = Vec::new();
            for i in 0..top {
                for j in 0..top {
                    let ok = act_elementary(i, j, &x, &hs[r]).map(|y| {
                        let target = lam.weight() as i64 + i as i64 - j as i64;
                        let graded = y.terms().all(|(mu, _)| mu.weight() as i64 == target);
                        graded && (support.contains(&j) || y.is_zero())
                    });
                    out.push(outcome(ok, format!("r={r} n={n:?} λ={lam} (i,j)=({i},{j})")));
                }
            }
            out
        })
        .collect();
    results.into_iter().for_each(|v| rep.absorb(v));
    rep
}

pub fn box_commutation_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("box-commutation");
    let hs = sequences(cfg.max_r);
    let results: Vec<Vec<(bool, String)>> = box_cells(cfg)
        .par_iter()
        .map(|(r, n, lam)| {
            let (r, n) = (*r, *n);
            let boxed = basis(r, Some(n), lam);
            let free = basis(r, None, lam);
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let ok = (|| -> Result<bool> {
                        let a = act_elementary(i, j, &boxed, &hs[r])?;
                        let b = project(&act_elementary(i, j, &free, &hs[r])?, n)?;
                        Ok(a == b)
                    })();
                    out.push(outcome(ok, format!("r={r} n={n} λ={lam} (i,j)=({i},{j})")));
                }
            }
            out
        })
        .collect();
    results.into_iter().for_each(|v| rep.absorb(v));
    rep
}

/// The oracle side of `Γ_r(z)`: `z^{-r} b(z) ∧ [b]^r_λ` in `B_{r+1}`,
/// certified through `z^{z_max}`.
pub fn gamma_oracle(lambda: &Partition, r: usize, z_max: i64, h_next: &HSequence) -> Result<LaurentWindow> {
    let order = (z_max + r as i64).max(0) as usize;
    let b = WedgeSeries::b_series(order).shift(-(r as i64), 0);
    let s = b.wedge(&WedgeSeries::constant(WedgeElement::basis(lambda, r)?))?;
    s.to_laurent(h_next)
}

/// The oracle side of `Γ*_r(w)`: `w^r β(w) ⌟ [b]^r_λ` in `B_{r-1}`, with
/// `β(w) = sum β_j w^{-j-1}`.
pub fn gamma_star_oracle(lambda: &Partition, r: usize, h_prev: &HSequence) -> Result<LaurentWindow> {
    let u = WedgeElement::basis(lambda, r)?;
    let top = u.max_index().unwrap_or(0);
    let mut entries = Vec::new();
    for j in 0..=top {
        let c = u.contract(j).to_schur().to_ring(h_prev)?;
        entries.push(((0, r as i64 - j as i64 - 1), c));
    }
    LaurentWindow::from_parts(r - 1, Window::exact(0, r as i64 - 1), entries)
}

pub fn vertex_operators_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("vertex-operators");
    let hs = sequences(cfg.max_r);
    let z_max = 6;
    for r in 0..cfg.max_r {
        for lam in enumerate_box(r, 3, None) {
            let x = basis(r, None, &lam);
            let oracle = gamma_oracle(&lam, r, z_max, &hs[r + 1]);
            let ok = (|| -> Result<bool> {
                let o = oracle.clone()?;
                let g = gamma(&x, &hs[r + 1], z_max, GammaVariant::Barred)?;
                Ok(g.agrees_with(&o) && o.window().certifies(z_max, 0))
            })();
            rep.check_result(ok, || format!("Γ_{r} on Δ_{lam} differs from b(z) ∧ [b]"));
        }
    }
    // the unbarred substitution must be refuted somewhere
    let refuted = (0..cfg.max_r).any(|r| {
        enumerate_box(r, 3, None).iter().any(|lam| {
            let x = basis(r, None, lam);
            match (
                gamma(&x, &hs[r + 1], z_max, GammaVariant::Unbarred),
                gamma_oracle(lam, r, z_max, &hs[r + 1]),
            ) {
                (Ok(g), Ok(o)) => !g.agrees_with(&o),
                _ => false,
            }
        })
    });
    rep.check(refuted, || "the unbarred Γ variant also matches the oracle".into());
    for r in 1..=cfg.max_r {
        for lam in enumerate_box(r, 3, None) {
            let x = basis(r, None, &lam);
            let ok = (|| -> Result<bool> {
                let g = gamma_star(&x, &hs[r - 1])?;
                let o = gamma_star_oracle(&lam, r, &hs[r - 1])?;
                Ok(g.agrees_with(&o) && o.agrees_with(&g))
            })();
            rep.check_result(ok, || format!("Γ*_{r} on Δ_{lam} differs from β(w) ⌟ [b]"));
        }
    }
    rep
}

/// The two printed expansions of `E(z,w)_4 Δ_(2,2)(H_{2,4})`, as
/// `(z, w, h-expression)` triples.
///
/// The worked example prints its last term as `h_2^2 z^2 / w^3`; a term of
/// degree 4 at `z^i w^{-j}` must have `4 + i - j = 4`, so the exponent is
/// transcribed as `z^3`.
pub const INTRO_DISPLAY: &[(i64, i64, &str)] = &[
    (0, -2, "-h2"),
    (1, -2, "-h1*h2"),
    (2, -2, "h2^2"),
    (0, -3, "-h1"),
    (1, -3, "-(h1^2 - h2)"),
    (3, -3, "h2^2"),
];

pub const WORKED_DISPLAY: &[(i64, i64, &str)] = &[
    (0, -2, "h2"),
    (1, -2, "h1*h2"),
    (2, -2, "h2^2"),
    (0, -3, "-h1"),
    (1, -3, "-(h1^2 - h2)"),
    (3, -3, "h2^2"),
];

#[derive(Clone, Debug)]
pub struct WorkedExample {
    /// `π_{2,4}` of the first closed form, through `z^3`, `w^{-3}`.
    pub closed_form: LaurentWindow,
    /// The same series assembled from `δ(E_ij)[b]^2_(2,2)`.
    pub oracle: LaurentWindow,
    pub matches_intro: bool,
    pub matches_worked: bool,
}

fn display_series(display: &[(i64, i64, &str)], h: &HSequence) -> Result<LaurentWindow> {
    let mut entries = Vec::new();
    for &(z, w, src) in display {
        entries.push(((z, w), parse_element(src, h)?));
    }
    LaurentWindow::from_parts(2, Window::new(0, Some(3), Some(-3), 0), entries)
}

pub fn worked_example() -> Result<WorkedExample> {
    let n = 4;
    let h = HSequence::new(2);
    let lam = Partition::new(vec![2, 2])?;
    let series = action_first_form(&lam, &h, n as i64 - 1)?;
    let closed_form = project_series(&series, n, &h)?;
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let y = oracle_action(i, j, &lam, 2, Some(n))?;
            entries.push(((i as i64, -(j as i64)), y.box_e_form(&h)?));
        }
    }
    let oracle = LaurentWindow::from_parts(2, Window::new(0, Some(3), Some(-3), 0), entries)?;
    let intro = project_series(&display_series(INTRO_DISPLAY, &h)?, n, &h)?;
    let worked = project_series(&display_series(WORKED_DISPLAY, &h)?, n, &h)?;
    let same = |a: &LaurentWindow, b: &LaurentWindow| a.agrees_with(b) && b.agrees_with(a);
    Ok(WorkedExample {
        matches_intro: same(&closed_form, &intro),
        matches_worked: same(&closed_form, &worked),
        closed_form,
        oracle,
    })
}

pub fn worked_example_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("worked-example");
    match worked_example() {
        Ok(w) => {
            let agree = w.closed_form.agrees_with(&w.oracle) && w.oracle.agrees_with(&w.closed_form);
            rep.check(agree, || "closed form and oracle series differ".into());
            rep.check(w.matches_intro != w.matches_worked, || {
                format!(
                    "expected exactly one printed expansion to match (intro: {}, worked: {})",
                    w.matches_intro, w.matches_worked
                )
            });
        }
        Err(e) => rep.check(false, || format!("error {e}")),
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            max_r: 2,
            max_n: 4,
            max_deg: 3,
            max_index: 4,
            lie_samples: 10,
            ..Default::default()
        }
    }

    #[test]
    fn all_suites_pass_on_a_small_grid() {
        for rep in run_all(&small()) {
            assert!(rep.passed(), "{}: {:?}", rep.name, &rep.failures[..rep.failures.len().min(5)]);
            assert!(rep.checks > 0, "{} ran no checks", rep.name);
        }
    }

    #[test]
    fn worked_example_matches_the_worked_display() {
        let w = worked_example().unwrap();
        assert!(w.matches_worked);
        assert!(!w.matches_intro);
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &small()).is_none());
    }
}
