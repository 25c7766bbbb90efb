//! Cross-checks between the simplicial fast paths and the independent
//! Taylor and enumeration routes, run on one ideal at a time.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinat::{stanley_reisner_complex, MonomialIdeal, MultiDegree, VarSet};
use crate::engine::Engine;
use crate::error::Result;
use crate::field::Field;
use crate::localcoh::{evaluate_hilbert_series, GradedModule};
use crate::matrix::is_invertible;
use crate::taylor::{build_taylor, ext_via_taylor, tor_via_taylor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest Frobenius power tried in the stabilization check.
    pub d_max: u32,
    pub seed: u64,
    /// Random `(i, α, l)` triples for the multiplication checks.
    pub mult_triples: usize,
    /// Boxes with more points than this are sampled instead of enumerated.
    pub max_box_points: usize,
    /// Taylor complexes on more generators are skipped.
    pub max_taylor_gens: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            d_max: 3,
            seed: 0,
            mult_triples: 200,
            max_box_points: 4096,
            max_taylor_gens: 10,
        }
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub mismatches: usize,
    /// The first few mismatches, described.
    pub samples: Vec<String>,
    pub skipped: Option<String>,
}

const SAMPLE_LIMIT: usize = 10;

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        CheckOutcome {
            name,
            cases: 0,
            mismatches: 0,
            samples: Vec::new(),
            skipped: None,
        }
    }

    fn skip(name: &'static str, reason: String) -> Self {
        CheckOutcome {
            skipped: Some(reason),
            ..CheckOutcome::new(name)
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.mismatches += 1;
            if self.samples.len() < SAMPLE_LIMIT {
                self.samples.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub ideal: MonomialIdeal,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn mismatches(&self) -> usize {
        self.checks.iter().map(|c| c.mismatches).sum()
    }
}

/// All points of `[lo, hi]^n`, or `limit` seeded samples when the box is larger.
pub fn box_or_sample(
    n: usize,
    lo: i64,
    hi: i64,
    limit: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<MultiDegree> {
    let side = (hi - lo + 1) as usize;
    let total = side.checked_pow(n as u32).unwrap_or(usize::MAX);
    if total <= limit {
        MultiDegree::box_points(
            &MultiDegree::new(vec![lo; n]),
            &MultiDegree::new(vec![hi; n]),
        )
        .expect("lo ≤ hi")
    } else {
        (0..limit)
            .map(|_| MultiDegree::new((0..n).map(|_| rng.gen_range(lo..=hi)).collect()))
            .collect()
    }
}

/// Runs every check on a squarefree, nonzero, proper ideal.
pub fn verify_ideal<F: Field>(
    engine: &Engine<F>,
    ideal: &MonomialIdeal,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    ideal.require_reduced_proper()?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let checks = vec![
        check_dual_and_complex(ideal)?,
        check_taylor_complexes(ideal, opts)?,
        check_duality(engine, ideal, opts)?,
        check_stabilization(engine, ideal, opts, &mut rng)?,
        check_pathways(engine, ideal)?,
        check_multiplication(engine, ideal, opts, &mut rng)?,
        check_betti_inequality(engine, ideal)?,
        check_hilbert(engine, ideal, opts, &mut rng)?,
        check_associated_primes(engine, ideal)?,
    ];
    Ok(VerifyReport {
        ideal: ideal.clone(),
        checks,
    })
}

/// `(B^∨)^∨ = B`; faces of `Δ` are the `F` with `X^{F^c} ∈ B`; the minimal
/// nonfaces of `Δ` are the generator supports of `B^∨`.
pub fn check_dual_and_complex(ideal: &MonomialIdeal) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("alexander-dual");
    let n = ideal.nvars();
    let dual = ideal.alexander_dual()?;
    out.record(dual.alexander_dual()?.same_ideal(ideal), || {
        "dual is not an involution".into()
    });
    let delta = stanley_reisner_complex(ideal)?;
    for f in VarSet::full(n).subsets() {
        let expected = ideal.contains_squarefree(f.complement(n));
        out.record(delta.contains_face(f) == expected, || {
            format!("face test disagrees at {f:?}")
        });
    }
    let mut nonfaces = delta.minimal_nonfaces();
    nonfaces.sort();
    let mut supports = dual.supports();
    supports.sort();
    out.record(nonfaces == supports, || {
        "minimal nonfaces differ from dual generators".into()
    });
    Ok(out)
}

/// `∂∘∂ = 0` and `H_0 = R/B^[d]` for the Taylor complexes of `B` and `B^∨`.
pub fn check_taylor_complexes(ideal: &MonomialIdeal, opts: &VerifyOptions) -> Result<CheckOutcome> {
    let dual = ideal.alexander_dual()?;
    if ideal.num_gens().max(dual.num_gens()) > opts.max_taylor_gens {
        return Ok(CheckOutcome::skip(
            "taylor-complex",
            "too many generators".into(),
        ));
    }
    let mut out = CheckOutcome::new("taylor-complex");
    for d in 1..=opts.d_max.max(1) {
        let t = build_taylor(ideal, d)?;
        out.record(t.check_square_zero().is_ok(), || {
            format!("∂∂ ≠ 0 for d={d}")
        });
        out.record(t.check_h0(), || format!("H_0 ≠ R/B^[{d}]"));
    }
    let t = build_taylor(&dual, 1)?;
    out.record(t.check_square_zero().is_ok(), || {
        "∂∂ ≠ 0 for the dual".into()
    });
    Ok(out)
}

/// `β_{i,α}(B^∨) = dim Ext^{|α|-i}(R/B,R)_{-α}`, and the Taylor count of
/// `Tor_i(B^∨, k)_α` agrees with Hochster's formula.
pub fn check_duality<F: Field>(
    engine: &Engine<F>,
    ideal: &MonomialIdeal,
    opts: &VerifyOptions,
) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("duality");
    let n = ideal.nvars();
    let dual = ideal.alexander_dual()?;
    let use_taylor = dual.num_gens() <= opts.max_taylor_gens;
    for alpha in VarSet::full(n).subsets() {
        let a = MultiDegree::indicator(n, alpha);
        for i in 0..=n as i64 {
            let betti = engine.hochster_betti(&dual, i, &a)?;
            let ext = engine
                .ext_piece(ideal, alpha.len() as i64 - i, &a.negated())?
                .dim;
            out.record(betti == ext, || {
                format!("β_{{{i},{a}}}(B^∨)={betti} but Ext={ext}")
            });
            if use_taylor {
                let tor = tor_via_taylor(engine.field(), &dual, i, &a)?;
                out.record(tor == betti, || {
                    format!("Tor_{i} at {a}: Taylor {tor}, Hochster {betti}")
                });
            }
        }
    }
    Ok(out)
}

/// For `α ∈ [-2,1]^n` and `d ≤ d_max`: the Taylor value of
/// `Ext^i(R/B^[d],R)_α` is zero when some `α_j < -d` and equals
/// `H^i_B(R)_α` otherwise.
pub fn check_stabilization<F: Field>(
    engine: &Engine<F>,
    ideal: &MonomialIdeal,
    opts: &VerifyOptions,
    rng: &mut ChaCha8Rng,
) -> Result<CheckOutcome> {
    if ideal.num_gens() > opts.max_taylor_gens {
        return Ok(CheckOutcome::skip(
            "stabilization",
            "too many generators".into(),
        ));
    }
    let mut out = CheckOutcome::new("stabilization");
    let n = ideal.nvars();
    for alpha in box_or_sample(n, -2, 1, opts.max_box_points, rng) {
        for i in 0..=n as i64 {
            let lc = engine.lc_piece(ideal, i, &alpha)?.dim;
            for d in 1..=opts.d_max {
                let v = ext_via_taylor(engine.field(), ideal, d, i, &alpha)?;
                let expected = if alpha.is_at_least(-i64::from(d)) {
                    lc
                } else {
                    0
                };
                out.record(v == expected, || {
                    format!("d={d} i={i} α={alpha}: Taylor {v}, expected {expected}")
                });
            }
        }
    }
    Ok(out)
}

/// `lc_piece`, `lc_piece_via_t` and `ext_piece_general` agree on every class `I_α`.
pub fn check_pathways<F: Field>(engine: &Engine<F>, ideal: &MonomialIdeal) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("pathways");
    let n = ideal.nvars();
    for set in VarSet::full(n).subsets() {
        let alpha = MultiDegree::indicator(n, set).negated();
        for i in 0..=n as i64 + 1 {
            let a = engine.lc_piece(ideal, i, &alpha)?.dim;
            let b = engine.lc_piece_via_t(ideal, i, &alpha)?.dim;
            let c = engine.ext_piece_general(ideal, i, &alpha)?.dim;
            out.record(a == b && b == c, || {
                format!("i={i} I={set:?}: Δ {a}, T {b}, Δ_α {c}")
            });
        }
    }
    Ok(out)
}

/// Multiplication by `X_l` is invertible when `α_l ≠ -1`; multiplications
/// commute and compose to the direct restriction.
pub fn check_multiplication<F: Field>(
    engine: &Engine<F>,
    ideal: &MonomialIdeal,
    opts: &VerifyOptions,
    rng: &mut ChaCha8Rng,
) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("multiplication");
    let n = ideal.nvars();
    let field = engine.field();
    let delta = stanley_reisner_complex(ideal)?;
    for _ in 0..opts.mult_triples {
        let i = rng.gen_range(0..=n as i64 + 1);
        let alpha = MultiDegree::new((0..n).map(|_| rng.gen_range(-2..=1)).collect());
        let l = rng.gen_range(0..n);
        let k = rng.gen_range(0..n);
        let m_l = engine.multiplication_map(ideal, i, &alpha, l)?;
        if alpha.coords()[l] != -1 {
            out.record(is_invertible(field, &m_l), || {
                format!("X_{l} not invertible at i={i} α={alpha}")
            });
        }
        let via_l = engine
            .multiplication_map(ideal, i, &alpha.bumped(l), k)?
            .mul(field, &m_l);
        let m_k = engine.multiplication_map(ideal, i, &alpha, k)?;
        let via_k = engine
            .multiplication_map(ideal, i, &alpha.bumped(k), l)?
            .mul(field, &m_k);
        let target = alpha.bumped(l).bumped(k);
        let direct = engine.restriction_on_cohomology(
            &delta.full_subcomplex(alpha.negative_support()),
            &delta.full_subcomplex(target.negative_support()),
            i - 2,
        )?;
        out.record(via_l == via_k && via_l == direct, || {
            format!("X_{l}X_{k} does not compose at i={i} α={alpha}")
        });
    }
    Ok(out)
}

/// The Betti inequality between `B` and `B^∨` and its extremal equality case.
pub fn check_betti_inequality<F: Field>(
    engine: &Engine<F>,
    ideal: &MonomialIdeal,
) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("betti-inequality");
    let report = engine.check_betti_inequality(ideal)?;
    for row in &report.rows {
        out.record(!row.violation, || {
            format!(
                "i={} α={:?}: β={} bound={} dual extremal={} extremal={}",
                row.index, row.support, row.lhs, row.rhs, row.dual_extremal, row.extremal
            )
        });
    }
    Ok(out)
}

/// The closed-form Hilbert series agrees with the dimensions of `Ext^i` on `[-1,2]^n`.
pub fn check_hilbert<F: Field>(
    engine: &Engine<F>,
    ideal: &MonomialIdeal,
    opts: &VerifyOptions,
    rng: &mut ChaCha8Rng,
) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("hilbert");
    let n = ideal.nvars();
    let points = box_or_sample(n, -1, 2, opts.max_box_points, rng);
    for i in 0..=n as i64 + 1 {
        let terms = engine.hilbert_series_closed_form(ideal, i)?;
        let filtration = engine.filtration_quotients(ideal, i)?;
        for beta in &points {
            let direct = engine.ext_piece(ideal, i, beta)?.dim;
            let closed = evaluate_hilbert_series(&terms, beta);
            let layered = filtration.dim_at(beta);
            out.record(direct == closed && closed == layered, || {
                format!("i={i} β={beta}: Ext {direct}, series {closed}, filtration {layered}")
            });
        }
        if points.len() == 4usize.pow(n as u32) {
            let lo = MultiDegree::new(vec![-1; n]);
            let hi = MultiDegree::new(vec![2; n]);
            let table = engine.hilbert_function_box(ideal, i, &lo, &hi, GradedModule::Ext)?;
            for (beta, v) in table {
                out.record(v == evaluate_hilbert_series(&terms, &beta), || {
                    format!("box value at i={i} β={beta}")
                });
            }
        }
    }
    Ok(out)
}

/// Minimal associated primes from the stacked-kernel test match the Betti
/// criterion, and every associated prime lies in the Betti support.
pub fn check_associated_primes<F: Field>(
    engine: &Engine<F>,
    ideal: &MonomialIdeal,
) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("associated-primes");
    let n = ideal.nvars();
    for i in 0..=n as i64 + 1 {
        let ass = engine.associated_primes(ideal, i)?;
        let minimal = engine.minimal_associated_primes(ideal, i)?;
        out.record(ass.minimal() == minimal, || {
            format!("minimal primes differ at i={i}")
        });
        let support = engine.betti_support(ideal, i)?;
        out.record(ass.iter().all(|p| support.contains(&p)), || {
            format!("associated prime outside the Betti support at i={i}")
        });
    }
    Ok(out)
}
