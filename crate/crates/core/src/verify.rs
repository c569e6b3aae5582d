//! Registry of the degenerate-Bernstein identities and an exhaustive checker.
//!
//! Each identity builds its two sides generically over [`Scalar`]. The
//! verdict expands both sides as canonical [`BiPoly`] values with `x` and `λ`
//! formal and compares them structurally; the same builders evaluated at
//! rational points give an independent numeric spot check.
//!
//! Several statements use `k` on the left while `k` is also the summation
//! index on the right. Those identities carry named interpretations for the
//! binding of that free `k` and are reported once per interpretation.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bernstein::{
    bernstein, bernstein_genfun_coeff, bernstein_or_zero, complement,
    connection_difference_operator, connection_stirling_bernoulli, falling_expansion, first_moment,
    ratio_multiplier_parts, three_term_sides, weighted_sum, RatioForm,
};
use crate::bipoly::BiPoly;
use crate::combinatorics::{
    degen_binom, degen_falling_factorial, degen_stirling2, degen_stirling2_from_series,
    falling_factorial, forward_difference_at_zero, oplus_power,
};
use crate::rational::{factorial, Rational};
use crate::scalar::Scalar;

/// Random rational triples checked per `n` for the Vandermonde identity.
pub const VANDERMONDE_SAMPLES: usize = 5;

const VANDERMONDE_SEED: u64 = 0x5eed_0006;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    GeneratingFunction,
    Symmetry,
    ThreeTerm,
    ThreeTermPrinted,
    Ratio,
    Recurrence,
    WeightedSum,
    StirlingBernoulli,
    DifferenceBernoulli,
    FallingExpansion,
    WeightedSumStirling,
    FirstMoment,
    Vandermonde,
    DifferenceStirling,
}

/// How the free `k` on the left-hand side is bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum KBinding {
    AtI,
    Zero,
    /// Ranged over `0..=n` as an extra parameter.
    Free,
}

/// How the Stirling-sum form obtains its `(x−kλ)_{i,λ}` factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Wiring {
    /// `Σ_l (x−kλ)_l S_{2,λ}(i,l)`.
    StirlingSum,
    /// `(x−kλ)_{i,λ}` directly, as in the weighted-sum identity.
    Direct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Interp {
    None,
    Ratio(RatioForm),
    Bind(KBinding),
    BindWired(KBinding, Wiring),
}

/// One registered identity.
#[derive(Debug, Clone, Copy)]
pub struct IdentitySpec {
    pub id: &'static str,
    /// Human-readable statement, `lhs = rhs`.
    pub statement: &'static str,
    interpretations: &'static [&'static str],
    kind: Kind,
}

const BINDINGS: &[&str] = &["k:=i", "k:=0", "k:=free"];
const WIRED_BINDINGS: &[&str] = &[
    "k:=i/stirling-sum",
    "k:=0/stirling-sum",
    "k:=free/stirling-sum",
    "k:=i/direct",
    "k:=0/direct",
    "k:=free/direct",
];

const REGISTRY: &[IdentitySpec] = &[
    IdentitySpec {
        id: "thm_2_1",
        statement: "n![t^n] (x)_{k,l}/k! t^k (1+lt)^{(1-x)/l} = B_{k,n}(x|l)",
        interpretations: &[],
        kind: Kind::GeneratingFunction,
    },
    IdentitySpec {
        id: "thm_2_2",
        statement: "B_{k,n}(1-x|l) = B_{n-k,n}(x|l)",
        interpretations: &[],
        kind: Kind::Symmetry,
    },
    IdentitySpec {
        id: "thm_2_3",
        statement: "(n-k)B_{k,n} + (k+1)B_{k+1,n} = n(1+l(1-n))B_{k,n-1}",
        interpretations: &[],
        kind: Kind::ThreeTerm,
    },
    IdentitySpec {
        id: "eq_16_printed",
        statement: "(n-k)B_{k,n} + (k+1)B_{k+1,n} = (1+l(1-n))B_{k,n-1}",
        interpretations: &[],
        kind: Kind::ThreeTermPrinted,
    },
    IdentitySpec {
        id: "thm_2_4",
        statement: "((n-k+1)/k)(c-(k-1)l)/(1-x-(n-k)l) B_{k-1,n} = B_{k,n}, c = n (printed) or x (corrected)",
        interpretations: &["printed", "corrected"],
        kind: Kind::Ratio,
    },
    IdentitySpec {
        id: "thm_2_5",
        statement: "(1-x-(n-k-1)l)B_{k,n-1} + (x-(k-1)l)B_{k-1,n-1} = B_{k,n}",
        interpretations: &[],
        kind: Kind::Recurrence,
    },
    IdentitySpec {
        id: "thm_2_6",
        statement: "(x-kl)_{i,l} (x (+)_l (1-x))^{n-i} = sum_{k=i}^n C(k,i)/C(n,i) B_{k,n}",
        interpretations: BINDINGS,
        kind: Kind::WeightedSum,
    },
    IdentitySpec {
        id: "thm_2_7",
        statement: "B_{k,n} = (x)_{k,l} sum_{m=k}^n C(n,m) S_{2,l}(m,k) beta^{(k)}_{n-m,l}(1-x)",
        interpretations: &[],
        kind: Kind::StirlingBernoulli,
    },
    IdentitySpec {
        id: "cor_2_8",
        statement: "B_{k,n} = (x)_{k,l} sum_{m=k}^n C(n,m) beta^{(k)}_{n-m,l}(1-x) D^k(0)_{m,l}/k!",
        interpretations: &[],
        kind: Kind::DifferenceBernoulli,
    },
    IdentitySpec {
        id: "thm_2_9",
        statement: "(x)_{n,l} = sum_{k=0}^n (x)_k S_{2,l}(n,k)",
        interpretations: &[],
        kind: Kind::FallingExpansion,
    },
    IdentitySpec {
        id: "thm_2_10",
        statement: "sum_{l'=0}^i (x-kl)_{l'} S_{2,l}(i,l') (x (+)_l (1-x))^{n-i} = sum_{k=i}^n C(k,i)/C(n,i) B_{k,n}",
        interpretations: WIRED_BINDINGS,
        kind: Kind::WeightedSumStirling,
    },
    IdentitySpec {
        id: "remark_2",
        statement: "sum_{k=0}^n (k/n) B_{k,n} = (x-kl)(x (+)_l (1-x))^{n-1}",
        interpretations: BINDINGS,
        kind: Kind::FirstMoment,
    },
    IdentitySpec {
        id: "eq_6",
        statement: "sum_m C(y,m)_l C(x,n-m)_l = C(x+y,n)_l at random rational (x, y, l)",
        interpretations: &[],
        kind: Kind::Vandermonde,
    },
    IdentitySpec {
        id: "eq_28",
        statement: "D^k(0)_{n,l}/k! = n![t^n] ((1+lt)^{1/l}-1)^k/k!",
        interpretations: &[],
        kind: Kind::DifferenceStirling,
    },
];

/// All registered identities, sorted by id.
pub fn registry() -> Vec<&'static IdentitySpec> {
    let mut specs: Vec<_> = REGISTRY.iter().collect();
    specs.sort_by_key(|s| s.id);
    specs
}

pub fn lookup(id: &str) -> Option<&'static IdentitySpec> {
    REGISTRY.iter().find(|s| s.id == id)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    UnknownId(String),
    MissingInterpretation {
        id: String,
        available: Vec<String>,
    },
    InvalidInterpretation {
        id: String,
        given: String,
        available: Vec<String>,
    },
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnknownId(id) => write!(f, "unknown identity id `{id}`"),
            Self::MissingInterpretation { id, available } => write!(
                f,
                "identity `{id}` needs an interpretation, one of: {}",
                available.join(", ")
            ),
            Self::InvalidInterpretation {
                id,
                given,
                available,
            } if available.is_empty() => {
                write!(f, "identity `{id}` takes no interpretation, got `{given}`")
            }
            Self::InvalidInterpretation {
                id,
                given,
                available,
            } => write!(
                f,
                "invalid interpretation `{given}` for `{id}`, expected one of: {}",
                available.join(", ")
            ),
        }
    }
}

/// A parameter tuple, in declaration order (`n` first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params(pub Vec<(&'static str, usize)>);

impl Params {
    pub fn get(&self, name: &str) -> Option<usize> {
        self.0.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub params: Params,
    /// `lhs − rhs`, never the zero polynomial.
    pub difference: BiPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub id: String,
    pub interpretation: Option<String>,
    pub checked: usize,
    pub status: Status,
    /// Smallest failing tuple in iteration order.
    pub first_failure: Option<Failure>,
    pub failures: usize,
}

impl IdentitySpec {
    pub fn interpretations(&self) -> &'static [&'static str] {
        self.interpretations
    }

    pub fn is_ambiguous(&self) -> bool {
        !self.interpretations.is_empty()
    }

    fn parse_interp(&self, given: Option<&str>) -> Result<Interp, VerifyError> {
        let available = || self.interpretations.iter().map(|s| s.to_string()).collect();
        let name = match (given, self.is_ambiguous()) {
            (None, false) => return Ok(Interp::None),
            (None, true) => {
                return Err(VerifyError::MissingInterpretation {
                    id: self.id.into(),
                    available: available(),
                })
            }
            (Some(g), _) => g,
        };
        let invalid = || VerifyError::InvalidInterpretation {
            id: self.id.into(),
            given: name.into(),
            available: available(),
        };
        if !self.interpretations.contains(&name) {
            return Err(invalid());
        }
        let binding = |s: &str| match s {
            "k:=i" => Some(KBinding::AtI),
            "k:=0" => Some(KBinding::Zero),
            "k:=free" => Some(KBinding::Free),
            _ => None,
        };
        let interp = match self.kind {
            Kind::Ratio => match name {
                "printed" => Interp::Ratio(RatioForm::Printed),
                _ => Interp::Ratio(RatioForm::Corrected),
            },
            Kind::WeightedSum | Kind::FirstMoment => {
                Interp::Bind(binding(name).ok_or_else(invalid)?)
            }
            Kind::WeightedSumStirling => {
                let (b, w) = name.split_once('/').ok_or_else(invalid)?;
                let wiring = if w == "direct" {
                    Wiring::Direct
                } else {
                    Wiring::StirlingSum
                };
                Interp::BindWired(binding(b).ok_or_else(invalid)?, wiring)
            }
            _ => return Err(invalid()),
        };
        Ok(interp)
    }

    fn binding(interp: Interp) -> Option<KBinding> {
        match interp {
            Interp::Bind(b) | Interp::BindWired(b, _) => Some(b),
            _ => None,
        }
    }

    /// Parameter tuples up to `n_max`: `n` ascending, then `k` (or `i`),
    /// then any free parameter.
    fn cases(&self, n_max: usize, interp: Interp) -> Vec<Params> {
        let mut out = Vec::new();
        let free = Self::binding(interp) == Some(KBinding::Free);
        for n in 0..=n_max {
            match self.kind {
                Kind::GeneratingFunction
                | Kind::Symmetry
                | Kind::StirlingBernoulli
                | Kind::DifferenceBernoulli
                | Kind::DifferenceStirling => {
                    out.extend((0..=n).map(|k| Params([("n", n), ("k", k)].into())));
                }
                Kind::ThreeTerm | Kind::ThreeTermPrinted => {
                    out.extend((0..n).map(|k| Params([("n", n), ("k", k)].into())));
                }
                Kind::Ratio if n >= 1 => {
                    out.extend((1..=n).map(|k| Params([("n", n), ("k", k)].into())));
                }
                Kind::Recurrence if n >= 1 => {
                    out.extend((0..=n).map(|k| Params([("n", n), ("k", k)].into())));
                }
                Kind::WeightedSum | Kind::WeightedSumStirling if n >= 1 => {
                    for i in 1..=n {
                        if free {
                            out.extend(
                                (0..=n).map(|k| Params([("n", n), ("i", i), ("k", k)].into())),
                            );
                        } else {
                            out.push(Params([("n", n), ("i", i)].into()));
                        }
                    }
                }
                Kind::FirstMoment if n >= 1 => {
                    if free {
                        out.extend((0..=n).map(|k| Params([("n", n), ("k", k)].into())));
                    } else {
                        out.push(Params([("n", n)].into()));
                    }
                }
                Kind::FallingExpansion => out.push(Params([("n", n)].into())),
                Kind::Vandermonde => {
                    out.extend(
                        (0..VANDERMONDE_SAMPLES).map(|s| Params([("n", n), ("sample", s)].into())),
                    );
                }
                _ => {}
            }
        }
        out
    }

    /// The value bound to the free `k` for this case.
    fn free_k(interp: Interp, params: &Params) -> usize {
        match Self::binding(interp) {
            Some(KBinding::AtI) => params.get("i").unwrap_or(1),
            Some(KBinding::Zero) => 0,
            Some(KBinding::Free) => params.get("k").expect("free k is a parameter"),
            None => unreachable!("identity has no free k"),
        }
    }

    fn sides<T: Scalar>(&self, interp: Interp, params: &Params, x: &T, lambda: &T) -> (T, T) {
        let n = params.get("n").expect("every case has n");
        let k = params.get("k").unwrap_or(0);
        let b = |k: usize, n: usize| bernstein(k, n, x, lambda).expect("k <= n");
        let signed = |v: i64| T::from_int(v);
        match self.kind {
            Kind::GeneratingFunction => (bernstein_genfun_coeff(k, n, x, lambda).value, b(k, n)),
            Kind::Symmetry => (
                bernstein(k, n, &complement(x), lambda).expect("k <= n"),
                b(n - k, n),
            ),
            Kind::ThreeTerm => three_term_sides(k, n, x, lambda, true).expect("k < n"),
            Kind::ThreeTermPrinted => three_term_sides(k, n, x, lambda, false).expect("k < n"),
            Kind::Ratio => {
                let Interp::Ratio(form) = interp else {
                    unreachable!()
                };
                let (numer, denom) = ratio_multiplier_parts(k, n, x, lambda, form);
                (numer * &b(k - 1, n), denom * &b(k, n))
            }
            Kind::Recurrence => {
                let (ni, ki) = (n as i64, k as i64);
                let left = (complement(x) - signed(ni - ki - 1) * lambda)
                    * &bernstein_or_zero(ki, n - 1, x, lambda);
                let right = (x.clone() - signed(ki - 1) * lambda)
                    * &bernstein_or_zero(ki - 1, n - 1, x, lambda);
                (left + right, b(k, n))
            }
            Kind::WeightedSum | Kind::WeightedSumStirling => {
                let i = params.get("i").expect("i is a parameter");
                let bound = Self::free_k(interp, params);
                let shifted = x.clone() - lambda.scale(&Rational::from_integer(bound.into()));
                let head = match interp {
                    Interp::BindWired(_, Wiring::StirlingSum) => {
                        (0..=i).fold(T::zero(), |acc, l| {
                            acc + falling_factorial(&shifted, l) * &degen_stirling2(i, l, lambda)
                        })
                    }
                    _ => degen_falling_factorial(&shifted, i, lambda),
                };
                let lhs = head * &oplus_power(x, &complement(x), n - i, lambda);
                (lhs, weighted_sum(i, n, x, lambda).expect("1 <= i <= n"))
            }
            Kind::FirstMoment => {
                let bound = Self::free_k(interp, params);
                let shifted = x.clone() - lambda.scale(&Rational::from_integer(bound.into()));
                let rhs = shifted * &oplus_power(x, &complement(x), n - 1, lambda);
                (first_moment(n, x, lambda).expect("n >= 1"), rhs)
            }
            Kind::StirlingBernoulli => (
                b(k, n),
                connection_stirling_bernoulli(k, n, x, lambda).expect("k <= n"),
            ),
            Kind::DifferenceBernoulli => (
                b(k, n),
                connection_difference_operator(k, n, x, lambda).expect("k <= n"),
            ),
            Kind::FallingExpansion => (
                degen_falling_factorial(x, n, lambda),
                falling_expansion(n, x, lambda),
            ),
            Kind::Vandermonde => {
                let s = params.get("sample").expect("sample index");
                let [xv, yv, lv] = vandermonde_triple(n, s);
                let lhs = (0..=n).fold(Rational::zero(), |acc, m| {
                    acc + degen_binom(&yv, m, &lv) * degen_binom(&xv, n - m, &lv)
                });
                let rhs = degen_binom(&(xv + &yv), n, &lv);
                (T::from_rational(lhs), T::from_rational(rhs))
            }
            Kind::DifferenceStirling => {
                let inv = Rational::from_integer(factorial(k)).recip();
                (
                    forward_difference_at_zero(n, k, lambda).scale(&inv),
                    degen_stirling2_from_series(n, k, lambda).expect("n within order"),
                )
            }
        }
    }

    fn run(&self, n_max: usize, interp: Interp, name: Option<&str>) -> VerifyReport {
        let (x, lambda) = (BiPoly::x(), BiPoly::lambda());
        let cases = self.cases(n_max, interp);
        let mut first_failure = None;
        let mut failures = 0;
        for params in &cases {
            let (lhs, rhs) = self.sides(interp, params, &x, &lambda);
            let difference = lhs - rhs;
            if !difference.is_zero() {
                failures += 1;
                if first_failure.is_none() {
                    first_failure = Some(Failure {
                        params: params.clone(),
                        difference,
                    });
                }
            }
        }
        let status = if failures == 0 && !cases.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        VerifyReport {
            id: self.id.into(),
            interpretation: name.map(Into::into),
            checked: cases.len(),
            status,
            first_failure,
            failures,
        }
    }

    /// Evaluates both sides at rational points, independently of the
    /// symbolic expansion. Returns the cases where they disagree.
    fn numeric_mismatches(
        &self,
        n_max: usize,
        interp: Interp,
        points: &[(Rational, Rational)],
    ) -> Vec<(Params, usize)> {
        let mut out = Vec::new();
        for params in self.cases(n_max, interp) {
            for (j, (x, lambda)) in points.iter().enumerate() {
                let (lhs, rhs) = self.sides(interp, &params, x, lambda);
                if lhs != rhs {
                    out.push((params.clone(), j));
                }
            }
        }
        out
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num: i64 = rng.gen_range(-12..=12);
    let den: i64 = rng.gen_range(1..=9);
    Rational::new(num.into(), den.into())
}

/// The `(x, y, λ)` triple used for Vandermonde sample `s` at degree `n`.
pub fn vandermonde_triple(n: usize, s: usize) -> [Rational; 3] {
    let mut rng = ChaCha8Rng::seed_from_u64(VANDERMONDE_SEED ^ ((n as u64) << 8) ^ s as u64);
    [
        random_rational(&mut rng),
        random_rational(&mut rng),
        random_rational(&mut rng),
    ]
}

/// `count` deterministic rational `(x, λ)` points from `seed`.
pub fn random_points(seed: u64, count: usize) -> Vec<(Rational, Rational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (random_rational(&mut rng), random_rational(&mut rng)))
        .collect()
}

/// Checks one identity under one interpretation. The interpretation is
/// required exactly when the identity is ambiguous.
pub fn verify(
    id: &str,
    n_max: usize,
    interpretation: Option<&str>,
) -> Result<VerifyReport, VerifyError> {
    let spec = lookup(id).ok_or_else(|| VerifyError::UnknownId(id.into()))?;
    let interp = spec.parse_interp(interpretation)?;
    Ok(spec.run(n_max, interp, interpretation))
}

/// Like [`verify`], but an ambiguous identity without an interpretation is
/// run once per registered interpretation.
pub fn verify_each(
    id: &str,
    n_max: usize,
    interpretation: Option<&str>,
) -> Result<Vec<VerifyReport>, VerifyError> {
    let spec = lookup(id).ok_or_else(|| VerifyError::UnknownId(id.into()))?;
    match interpretation {
        None if spec.is_ambiguous() => spec
            .interpretations
            .iter()
            .map(|name| verify(id, n_max, Some(name)))
            .collect(),
        _ => verify(id, n_max, interpretation).map(|r| alloc::vec![r]),
    }
}

/// Every `(id, interpretation)` job in report order.
pub fn jobs() -> Vec<(&'static str, Option<&'static str>)> {
    let mut out = Vec::new();
    for spec in registry() {
        if spec.is_ambiguous() {
            out.extend(spec.interpretations.iter().map(|i| (spec.id, Some(*i))));
        } else {
            out.push((spec.id, None));
        }
    }
    out
}

/// Runs every identity and every interpretation, ordered by id.
pub fn verify_all(n_max: usize) -> Vec<VerifyReport> {
    jobs()
        .into_iter()
        .map(|(id, interp)| verify(id, n_max, interp).expect("registered job"))
        .collect()
}

/// Numeric cross-check of one identity at the given `(x, λ)` points.
/// Returns `(parameters, point index)` for every disagreement.
pub fn spot_check(
    id: &str,
    n_max: usize,
    interpretation: Option<&str>,
    points: &[(Rational, Rational)],
) -> Result<Vec<(Params, usize)>, VerifyError> {
    let spec = lookup(id).ok_or_else(|| VerifyError::UnknownId(id.into()))?;
    let interp = spec.parse_interp(interpretation)?;
    Ok(spec.numeric_mismatches(n_max, interp, points))
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id)?;
        if let Some(i) = &self.interpretation {
            write!(f, " [{i}]")?;
        }
        write!(f, ": {} ({} cases)", self.status.as_str(), self.checked)?;
        if let Some(fail) = &self.first_failure {
            write!(
                f,
                ", first failure at {}: difference {}",
                fail.params, fail.difference
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let ids: Vec<_> = registry().iter().map(|s| s.id).collect();
        for (i, a) in ids.iter().enumerate() {
            assert!(!ids[i + 1..].contains(a), "duplicate id {a}");
        }
    }

    #[test]
    fn symmetry_count() {
        let r = verify("thm_2_2", 10, None).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, 66);
    }

    #[test]
    fn three_term_smallest_instance() {
        let r = verify("thm_2_3", 1, None).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, 1);
    }

    #[test]
    fn interpretation_errors() {
        assert!(matches!(
            verify("thm_9_9", 3, None),
            Err(VerifyError::UnknownId(_))
        ));
        assert!(matches!(
            verify("thm_2_6", 3, None),
            Err(VerifyError::MissingInterpretation { .. })
        ));
        assert!(matches!(
            verify("thm_2_6", 3, Some("k:=7")),
            Err(VerifyError::InvalidInterpretation { .. })
        ));
        assert!(matches!(
            verify("thm_2_2", 3, Some("k:=i")),
            Err(VerifyError::InvalidInterpretation { .. })
        ));
        assert_eq!(verify_each("thm_2_6", 2, None).unwrap().len(), 3);
        assert_eq!(verify_each("thm_2_10", 2, None).unwrap().len(), 6);
    }

    #[test]
    fn printed_ratio_fails_at_first_case() {
        let r = verify("thm_2_4", 4, Some("printed")).unwrap();
        assert_eq!(r.status, Status::Fail);
        let fail = r.first_failure.unwrap();
        assert_eq!(fail.params, Params([("n", 1), ("k", 1)].into()));
        assert!(!fail.difference.is_zero());
        assert!(verify("thm_2_4", 6, Some("corrected")).unwrap().passed());
    }

    #[test]
    fn failure_count_is_consistent() {
        for report in verify_all(3) {
            assert_eq!(report.passed(), report.failures == 0, "{report}");
            assert_eq!(report.first_failure.is_some(), report.failures > 0);
            assert!(report.checked > 0);
        }
    }

    #[test]
    fn vandermonde_triples_are_deterministic() {
        assert_eq!(vandermonde_triple(3, 2), vandermonde_triple(3, 2));
        assert_ne!(vandermonde_triple(3, 2), vandermonde_triple(3, 1));
    }
}
