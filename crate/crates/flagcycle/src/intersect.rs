//! Intersection points of maximal-length Schubert varieties with base cycles.
//!
//! When a Schubert variety `S_w` has dimension complementary to the base
//! cycle `C_α` inside the flag manifold, the intersection `S_w ∩ C_α` is a
//! finite set of torus-fixed flags.  This module constructs those finite
//! sets combinatorially, one family at a time:
//!
//! * [`supset`] — split symplectic groups: the sign variants of the
//!   translated label, one point in every flag domain;
//! * [`supset_sostar`] — quaternionic orthogonal groups: the points of the
//!   super dense cell, computed geometrically and grouped by domain;
//! * [`swite`] / [`swito`] — indefinite orthogonal groups (even / odd
//!   signature defect): the pair-switch variants of a perfect label;
//! * [`swit`] — quaternionic symplectic groups: the pair-switch variants of
//!   a perfect label.
//!
//! Every function returns an [`IntersectionReport`] carrying the points as
//! explicit [`FixedFlag`]s (so the exact-arithmetic oracle can re-check them
//! without trusting any labeling convention), grouped by the *computed*
//! signature of each emitted flag.  [`intersection_points`] restricts a
//! report to a single flag domain.
//!
//! Duplicate labels produced by the switch constructions are removed by set
//! semantics.  For the quaternionic symplectic family the full switch set
//! deliberately overshoots the geometric intersection: only the
//! sign-preserving order switches are genuine intersection points, a fact
//! the verification driver in [`crate::flag_oracle`] records explicitly.
//!
//! ```
//! use flagcycle::intersect::supset;
//! use flagcycle::real_forms::RealForm;
//! use flagcycle::classify::super_generous;
//!
//! let rf = RealForm::sp2n_r(2).unwrap();
//! let report = supset(&rf, &super_generous(2).unwrap()).unwrap();
//! assert_eq!(report.counts.total_points, 4);
//! assert_eq!(report.counts.domains_touched, 4);
//! assert_eq!(report.counts.points_per_domain, 1);
//! ```

use std::collections::{BTreeMap, BTreeSet};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::classify;
use crate::flag_oracle::{flag_signature, FixedFlag, Oracle, OracleError};
use crate::real_forms::{RealForm, SignatureVector};
use crate::weyl_core::SignedPermutation;

/// Cardinality summary of an intersection report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntersectionCounts {
    /// Number of points across all domains.
    pub total_points: usize,
    /// Number of flag domains receiving at least one point.
    pub domains_touched: usize,
    /// Number of points in each touched domain (uniform in every
    /// implemented construction).
    pub points_per_domain: usize,
}

/// The full intersection picture of one Schubert variety against all flag
/// domains: the points, their grouping by domain, and the cardinalities.
#[derive(Debug, Clone)]
pub struct IntersectionReport {
    /// The Schubert label.
    pub w: SignedPermutation,
    /// Every intersection point, as an explicit fixed flag.
    pub points: Vec<FixedFlag>,
    /// Point labels keyed by the computed signature of the emitted flag.
    pub by_domain: BTreeMap<String, Vec<SignedPermutation>>,
    /// Cardinality summary.
    pub counts: IntersectionCounts,
}

#[derive(Serialize)]
struct PointRecord {
    label: String,
    signature: String,
    vectors: Vec<String>,
}

impl Serialize for IntersectionReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IntersectionReport", 4)?;
        st.serialize_field("w", &self.w.to_string())?;
        let points: Vec<PointRecord> = self
            .points
            .iter()
            .map(|f| PointRecord {
                label: f.label().to_string(),
                signature: self
                    .by_domain
                    .iter()
                    .find(|(_, v)| v.iter().any(|x| x.entries() == f.label().entries()))
                    .map(|(k, _)| k.clone())
                    .unwrap_or_default(),
                vectors: f.vectors().iter().map(|v| v.to_string()).collect(),
            })
            .collect();
        st.serialize_field("points", &points)?;
        let by_domain: BTreeMap<&String, Vec<String>> = self
            .by_domain
            .iter()
            .map(|(k, v)| (k, v.iter().map(|x| x.to_string()).collect()))
            .collect();
        st.serialize_field("by_domain", &by_domain)?;
        st.serialize_field("counts", &self.counts)?;
        st.end()
    }
}

/// Assembles a report from fixed-flag labels, grouping by the computed
/// signature of each realized flag.
fn report_from_labels(
    rf: &RealForm,
    w: &SignedPermutation,
    labels: BTreeSet<Vec<i32>>,
) -> Result<IntersectionReport, OracleError> {
    let mut points = Vec::with_capacity(labels.len());
    let mut by_domain: BTreeMap<String, Vec<SignedPermutation>> = BTreeMap::new();
    for entries in labels {
        let label = SignedPermutation::new(entries, rf.weyl_family())?;
        let flag = FixedFlag::from_label(rf, &label)?;
        let sig = flag_signature(rf, &flag).to_string();
        by_domain.entry(sig).or_default().push(label);
        points.push(flag);
    }
    let total_points = points.len();
    let domains_touched = by_domain.len();
    let points_per_domain = by_domain.values().map(Vec::len).max().unwrap_or(0);
    debug_assert!(by_domain.values().all(|v| v.len() == points_per_domain));
    Ok(IntersectionReport {
        w: w.clone(),
        points,
        by_domain,
        counts: IntersectionCounts {
            total_points,
            domains_touched,
            points_per_domain,
        },
    })
}

/// Locates the two boxes of a pair inside `w`: the box holding the exact
/// entry `a` and the box holding the entry of modulus `b_mod`.
fn pair_boxes(w: &[i32], a: i32, b_mod: i32) -> Result<(usize, usize), OracleError> {
    let pa = w.iter().position(|&x| x == a);
    let pb = w.iter().position(|&x| x.abs() == b_mod);
    match (pa, pb) {
        (Some(pa), Some(pb)) => Ok((pa, pb)),
        _ => Err(OracleError::Precondition(format!(
            "label does not carry the pair ({a}, ±{b_mod})"
        ))),
    }
}

/// All labels obtained from `w` by independently replacing the entries at
/// each listed pair of boxes `(i, j)` holding `(a, b)` with one of
/// `(a, b)`, `(b, a)`, `(-a, -b)`, `(-b, -a)`, then translating with the
/// Weyl-group bijection of the form.
fn switch_labels(
    rf: &RealForm,
    w: &SignedPermutation,
    pairs: &[(usize, usize)],
) -> Result<BTreeSet<Vec<i32>>, OracleError> {
    let base = w.entries().to_vec();
    let mut out = BTreeSet::new();
    let total: usize = 4usize.pow(pairs.len() as u32);
    for mask in 0..total {
        let mut v = base.clone();
        let mut rest = mask;
        for &(pa, pb) in pairs {
            let (a, b) = (base[pa], base[pb]);
            let (x, y) = match rest % 4 {
                0 => (a, b),
                1 => (b, a),
                2 => (-a, -b),
                _ => (-b, -a),
            };
            v[pa] = x;
            v[pb] = y;
            rest /= 4;
        }
        let variant = SignedPermutation::new(v, rf.weyl_family())?;
        out.insert(rf.psi(&variant)?.entries().to_vec());
    }
    Ok(out)
}

/// Intersection points for a generous label of the split symplectic group:
/// all `2^n` sign variants of the translated label, one in each flag
/// domain.
///
/// # Errors
///
/// [`OracleError::Precondition`] when the form is not split symplectic or
/// the label is not generous.
pub fn supset(rf: &RealForm, w: &SignedPermutation) -> Result<IntersectionReport, OracleError> {
    let RealForm::SpR { n } = *rf else {
        return Err(OracleError::Precondition(format!(
            "supset applies to the split symplectic family, not {rf}"
        )));
    };
    rf.check_member(w)?;
    if !classify::is_generous(w)? {
        return Err(OracleError::Precondition(format!("{w} is not generous")));
    }
    let translated = rf.psi(w)?;
    let mut labels = BTreeSet::new();
    for mask in 0..(1usize << n) {
        let v: Vec<i32> = translated
            .entries()
            .iter()
            .enumerate()
            .map(|(k, &x)| if mask >> k & 1 == 1 { -x } else { x })
            .collect();
        labels.insert(v);
    }
    report_from_labels(rf, w, labels)
}

/// Intersection points for the super dense label of the quaternionic
/// orthogonal group, computed geometrically: the fixed flags of the super
/// dense cell, one in each of the `2^{⌊n/2⌋}` touched domains.
///
/// The closed-form description of this set as sign variants breaks down
/// from rank three on, so the points are read off the exact-arithmetic
/// oracle instead of a substitution rule.
///
/// # Errors
///
/// [`OracleError::Precondition`] when the form is not quaternionic
/// orthogonal or the label is not super dense.
pub fn supset_sostar(
    rf: &RealForm,
    w: &SignedPermutation,
) -> Result<IntersectionReport, OracleError> {
    let RealForm::SOStar { n } = *rf else {
        return Err(OracleError::Precondition(format!(
            "supset_sostar applies to the quaternionic orthogonal family, not {rf}"
        )));
    };
    rf.check_member(w)?;
    if w.entries() != classify::super_dense(n)?.entries() {
        return Err(OracleError::Precondition(format!("{w} is not super dense")));
    }
    let oracle = Oracle::new(rf)?;
    let cells = oracle.cells()?;
    let labels: BTreeSet<Vec<i32>> = cells
        .get(w.entries())
        .cloned()
        .unwrap_or_default()
        .into_iter()
        .collect();
    report_from_labels(rf, w, labels)
}

/// Intersection points for a perfect label of the indefinite orthogonal
/// group with even signature defect `q`: the `2^q` pair-switch variants,
/// `2^{q/2}` in each of `2^{q/2}` domains.
///
/// # Errors
///
/// [`OracleError::Precondition`] when the form is not indefinite orthogonal
/// with even `q` or the label is not perfect.
pub fn swite(rf: &RealForm, w: &SignedPermutation) -> Result<IntersectionReport, OracleError> {
    let RealForm::SOpq { q, .. } = *rf else {
        return Err(OracleError::Precondition(format!(
            "swite applies to the indefinite orthogonal family, not {rf}"
        )));
    };
    if q % 2 != 0 {
        return Err(OracleError::Precondition(
            "swite requires an even signature defect; use swito".to_string(),
        ));
    }
    if !classify::is_perfect_harmonic(rf, w)? {
        return Err(OracleError::Precondition(format!("{w} is not perfect")));
    }
    let mut pairs = Vec::with_capacity(q / 2);
    for i in 1..=q / 2 {
        pairs.push(pair_boxes(w.entries(), -(2 * i as i32 - 1), 2 * i as i32)?);
    }
    let labels = switch_labels(rf, w, &pairs)?;
    report_from_labels(rf, w, labels)
}

/// Intersection points for a perfect label of the indefinite orthogonal
/// group with odd signature defect `q`: the `2^{q-1}` pair-switch variants,
/// `2^{(q-1)/2}` in each of `2^{(q-1)/2}` domains.
///
/// # Errors
///
/// [`OracleError::Precondition`] when the form is not indefinite orthogonal
/// with odd `q` or the label is not perfect.
pub fn swito(rf: &RealForm, w: &SignedPermutation) -> Result<IntersectionReport, OracleError> {
    let RealForm::SOpq { q, .. } = *rf else {
        return Err(OracleError::Precondition(format!(
            "swito applies to the indefinite orthogonal family, not {rf}"
        )));
    };
    if q % 2 != 1 {
        return Err(OracleError::Precondition(
            "swito requires an odd signature defect; use swite".to_string(),
        ));
    }
    if !classify::is_perfect_harmonic(rf, w)? {
        return Err(OracleError::Precondition(format!("{w} is not perfect")));
    }
    let mut pairs = Vec::with_capacity((q - 1) / 2);
    for i in 1..=(q - 1) / 2 {
        pairs.push(pair_boxes(w.entries(), -(2 * i as i32 - 1), 2 * i as i32)?);
    }
    let labels = switch_labels(rf, w, &pairs)?;
    report_from_labels(rf, w, labels)
}

/// The full switch set for a perfect label of the quaternionic symplectic
/// group: the `4^q` pair-switch variants, `2^q` in each of `2^q` domains.
///
/// The switch set contains the geometric intersection (the `2^q`
/// sign-preserving order switches, one per touched domain) as a strict
/// subset; the sign-flip variants are torus-fixed flags of *other* Schubert
/// cells.  The verification driver checks both facts.
///
/// # Errors
///
/// [`OracleError::Precondition`] when the form is not quaternionic
/// symplectic or the label is not perfect.
pub fn swit(rf: &RealForm, w: &SignedPermutation) -> Result<IntersectionReport, OracleError> {
    let RealForm::Sppq { q, .. } = *rf else {
        return Err(OracleError::Precondition(format!(
            "swit applies to the quaternionic symplectic family, not {rf}"
        )));
    };
    if !classify::is_perfect_major(rf, w)? {
        return Err(OracleError::Precondition(format!("{w} is not perfect")));
    }
    let mut pairs = Vec::with_capacity(q);
    for j in 1..=q {
        pairs.push(pair_boxes(w.entries(), -2 * j as i32, 2 * j as i32 - 1)?);
    }
    let labels = switch_labels(rf, w, &pairs)?;
    report_from_labels(rf, w, labels)
}

/// The full intersection report appropriate to the form: [`supset`],
/// [`supset_sostar`], [`swite`]/[`swito`], or [`swit`].
pub fn full_report(rf: &RealForm, w: &SignedPermutation) -> Result<IntersectionReport, OracleError> {
    match rf {
        RealForm::SpR { .. } => supset(rf, w),
        RealForm::SOStar { .. } => supset_sostar(rf, w),
        RealForm::SOpq { q, .. } => {
            if q % 2 == 0 {
                swite(rf, w)
            } else {
                swito(rf, w)
            }
        }
        RealForm::Sppq { .. } => swit(rf, w),
    }
}

/// The intersection points lying in the single flag domain `alpha`: the
/// `alpha` slice of the corresponding full report, empty when the Schubert
/// variety misses that domain.
///
/// # Errors
///
/// [`OracleError::Precondition`] when `alpha` is not a domain signature of
/// the form, plus the precondition errors of the underlying construction.
pub fn intersection_points(
    rf: &RealForm,
    w: &SignedPermutation,
    alpha: &SignatureVector,
) -> Result<Vec<FixedFlag>, OracleError> {
    let domains = rf.enumerate_flag_domains()?;
    if !domains.contains(alpha) {
        return Err(OracleError::Precondition(format!(
            "{alpha} is not a flag-domain signature of {rf}"
        )));
    }
    let report = full_report(rf, w)?;
    let want = alpha.to_string();
    Ok(report
        .points
        .into_iter()
        .filter(|f| flag_signature(rf, f).to_string() == want)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{generate_perfect_harmonic, generate_perfect_major, super_generous};
    use crate::flag_oracle::enumerate_fixed_flags;
    use crate::real_forms::Sign;

    fn form(code: &str) -> RealForm {
        code.parse().unwrap()
    }

    fn perm(rf: &RealForm, entries: &[i32]) -> SignedPermutation {
        SignedPermutation::new(entries.to_vec(), rf.weyl_family()).unwrap()
    }

    fn labels(rep: &IntersectionReport) -> BTreeSet<Vec<i32>> {
        rep.points
            .iter()
            .map(|f| f.label().entries().to_vec())
            .collect()
    }

    #[test]
    fn supset_counts_and_uniqueness() {
        for n in 1..=4usize {
            let rf = RealForm::sp2n_r(n).unwrap();
            let rep = supset(&rf, &super_generous(n).unwrap()).unwrap();
            assert_eq!(rep.counts.total_points, 1 << n);
            assert_eq!(rep.counts.domains_touched, 1 << n);
            assert_eq!(rep.counts.points_per_domain, 1);
        }
    }

    #[test]
    fn supset_rejects_non_generous() {
        let rf = form("sp2n-r:2");
        let w = perm(&rf, &[1, 2]);
        assert!(matches!(
            supset(&rf, &w),
            Err(OracleError::Precondition(_))
        ));
    }

    #[test]
    fn supset_sostar_golden_small() {
        let rf = form("so-star:2");
        let w = perm(&rf, &[-2, -1]);
        let rep = supset_sostar(&rf, &w).unwrap();
        let want: BTreeSet<Vec<i32>> = [vec![1, 2], vec![-2, -1]].into_iter().collect();
        assert_eq!(labels(&rep), want);
        assert_eq!(rep.counts.domains_touched, 2);
        assert_eq!(rep.counts.points_per_domain, 1);

        let rf = form("so-star:3");
        let w = perm(&rf, &[3, -2, -1]);
        let rep = supset_sostar(&rf, &w).unwrap();
        let want: BTreeSet<Vec<i32>> = [vec![2, 1, 3], vec![2, -3, -1]].into_iter().collect();
        assert_eq!(labels(&rep), want);
        assert_eq!(rep.counts.domains_touched, 2);
    }

    #[test]
    fn swite_golden_so42() {
        let rf = form("so-pq:4,2");
        let w = perm(&rf, &[-1, 2, -3]);
        let rep = swite(&rf, &w).unwrap();
        assert_eq!(rep.counts.total_points, 4);
        assert_eq!(rep.counts.domains_touched, 2);
        assert_eq!(rep.counts.points_per_domain, 2);
        // every point really lies in the cell of w
        let oracle = Oracle::new(&rf).unwrap();
        for f in &rep.points {
            assert_eq!(oracle.cell_label(f).unwrap().entries(), w.entries());
        }
    }

    #[test]
    fn swite_cardinalities_so64() {
        let rf = form("so-pq:6,4");
        let w = perm(&rf, &[-1, 2, -3, 4, 5]);
        let rep = swite(&rf, &w).unwrap();
        assert_eq!(rep.counts.total_points, 16);
        assert_eq!(rep.counts.domains_touched, 4);
        assert_eq!(rep.counts.points_per_domain, 4);
    }

    #[test]
    fn swito_golden_so53() {
        let rf = form("so-pq:5,3");
        let w = perm(&rf, &[-1, 2, 4, -3]);
        let rep = swito(&rf, &w).unwrap();
        assert_eq!(rep.counts.total_points, 4);
        assert_eq!(rep.counts.domains_touched, 2);
        assert_eq!(rep.counts.points_per_domain, 2);
        let oracle = Oracle::new(&rf).unwrap();
        for f in &rep.points {
            assert_eq!(oracle.cell_label(f).unwrap().entries(), w.entries());
        }
    }

    #[test]
    fn swit_golden_sp21() {
        let rf = form("sp-pq:2,1");
        let w = perm(&rf, &[-2, 1, 3]);
        let rep = swit(&rf, &w).unwrap();
        assert_eq!(rep.counts.total_points, 4);
        assert_eq!(rep.counts.domains_touched, 2);
        assert_eq!(rep.counts.points_per_domain, 2);
        let set = labels(&rep);
        // the sign-preserving order switches are the geometric points
        assert!(set.contains(&vec![1, 2, 3]));
        assert!(set.contains(&vec![2, 1, 3]));
    }

    #[test]
    fn swit_cardinalities_sp32() {
        let rf = form("sp-pq:3,2");
        let w = perm(&rf, &[-4, 3, -2, 1, 5]);
        let rep = swit(&rf, &w).unwrap();
        assert_eq!(rep.counts.total_points, 16);
        assert_eq!(rep.counts.domains_touched, 4);
        assert_eq!(rep.counts.points_per_domain, 4);
    }

    #[test]
    fn intersection_points_match_exhaustive_search() {
        // every per-domain slice agrees with a brute-force scan over all
        // fixed flags, for one perfect label in each small family
        for (code, entries) in [
            ("so-pq:4,2", vec![-1, 2, -3]),
            ("so-pq:5,3", vec![-1, 2, 4, -3]),
        ] {
            let rf = form(code);
            let w = perm(&rf, &entries);
            let oracle = Oracle::new(&rf).unwrap();
            for alpha in rf.enumerate_flag_domains().unwrap() {
                let got: BTreeSet<Vec<i32>> = intersection_points(&rf, &w, &alpha)
                    .unwrap()
                    .iter()
                    .map(|f| f.label().entries().to_vec())
                    .collect();
                let want: BTreeSet<Vec<i32>> = enumerate_fixed_flags(&rf)
                    .unwrap()
                    .iter()
                    .filter(|f| {
                        flag_signature(&rf, f).to_string() == alpha.to_string()
                            && oracle.cell_label(f).unwrap().entries() == w.entries()
                    })
                    .map(|f| f.label().entries().to_vec())
                    .collect();
                assert_eq!(got, want, "{code} alpha={alpha}");
            }
        }
    }

    #[test]
    fn intersection_points_rejects_bad_domain() {
        let rf = form("sp2n-r:2");
        let alpha = SignatureVector::new(vec![Sign::Plus; 3]);
        let w = super_generous(2).unwrap();
        assert!(matches!(
            intersection_points(&rf, &w, &alpha),
            Err(OracleError::Precondition(_))
        ));
    }

    #[test]
    fn every_perfect_label_yields_uniform_domains() {
        for code in ["so-pq:4,2", "so-pq:6,4", "so-pq:5,3"] {
            let rf = form(code);
            for w in generate_perfect_harmonic(&rf).unwrap() {
                let rep = full_report(&rf, &w).unwrap();
                assert_eq!(
                    rep.counts.total_points,
                    rep.counts.domains_touched * rep.counts.points_per_domain,
                    "{code} {w}"
                );
            }
        }
        for code in ["sp-pq:2,1", "sp-pq:3,2"] {
            let rf = form(code);
            for w in generate_perfect_major(&rf).unwrap() {
                let rep = full_report(&rf, &w).unwrap();
                assert_eq!(
                    rep.counts.total_points,
                    rep.counts.domains_touched * rep.counts.points_per_domain,
                    "{code} {w}"
                );
            }
        }
    }

    #[test]
    fn report_serializes_deterministically() {
        let rf = form("sp2n-r:2");
        let rep = supset(&rf, &super_generous(2).unwrap()).unwrap();
        let a = serde_json::to_string(&rep).unwrap();
        let b = serde_json::to_string(&rep).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("\"counts\""));
    }
}
