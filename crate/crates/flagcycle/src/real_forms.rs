//! Parameter records for the four classical real forms acting on a full flag
//! manifold, together with the exact linear-algebra data attached to each one.
//!
//! A real form here is one of `Sp(2n,R)`, `SO*(2n)`, `SO(p,q)`, or
//! `Sp(2p,2q)`.  Each determines:
//!
//! * a signed-permutation Weyl family ([`crate::weyl_core::WeylFamily`]) and a
//!   rank `n`, so Schubert cells and base-cycle strata are indexed by signed
//!   permutations;
//! * an ambient complex dimension `m` (2n or 2n+1) carrying an invariant
//!   bilinear form and an invariant Hermitian form;
//! * an Iwasawa-adapted isotropic reference flag (`iwasawa_basis`), whose
//!   Schubert cells stratify the flag manifold;
//! * a distinguished basis of Hermitian eigenvectors
//!   (`standard_fixed_eigenbasis`), whose coordinate flags are exactly the
//!   fixed points of the compact torus that lie on the closed orbits;
//! * the relabelling map `psi` between the Weyl-group labels of Iwasawa
//!   Schubert cells and the labels of fixed flags.
//!
//! Forms are parsed from compact CLI codes:
//!
//! ```
//! use flagcycle::real_forms::RealForm;
//!
//! let f: RealForm = "so-pq:5,3".parse().unwrap();
//! assert_eq!(f.rank(), 4);
//! assert_eq!(f.ambient_dim(), 8);
//! assert_eq!(f.code(), "so-pq:5,3");
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::flag_oracle::{self, ExactScalar, ExactVector};
use crate::weyl_core::{SignedPermutation, WeylError, WeylFamily};

/// Errors arising from real-form parsing and form-specific preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealFormError {
    /// The textual form code could not be parsed.
    #[error("unrecognized real form code `{0}` (expected sp2n-r:<n>, so-star:<n>, so-pq:<p>,<q>, or sp-pq:<p>,<q>)")]
    BadCode(String),
    /// The numeric parameters violate the preconditions of the form.
    #[error("invalid parameters for {form}: {reason}")]
    BadParams { form: String, reason: String },
    /// A signed permutation does not live in the Weyl group of this form.
    #[error("permutation has family/rank incompatible with the real form")]
    GroupMismatch,
    /// An underlying Weyl-group operation failed.
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

/// One of the two signs of a Hermitian eigenvector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    /// Positive-definite direction of the invariant Hermitian form.
    Plus,
    /// Negative-definite direction of the invariant Hermitian form.
    Minus,
}

impl Sign {
    /// The opposite sign.
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Renders as `'+'` or `'-'`.
    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// The signature of a fixed flag: for each step `V_1 ⊂ … ⊂ V_n` the sign of
/// the Hermitian eigenvector added at that step.
///
/// Signature vectors index the open orbits (flag domains) containing fixed
/// points; two fixed flags lie in the same flag domain exactly when their
/// signature vectors agree.
///
/// ```
/// use flagcycle::real_forms::SignatureVector;
///
/// let s: SignatureVector = "+-+".parse().unwrap();
/// assert_eq!(s.len(), 3);
/// assert_eq!(s.to_string(), "+-+");
/// ```
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignatureVector {
    signs: Vec<Sign>,
}

impl SignatureVector {
    /// Wraps an explicit list of signs.
    pub fn new(signs: Vec<Sign>) -> Self {
        SignatureVector { signs }
    }

    /// The alternating signature `+-+-…` of the given length, used in the
    /// saturation checks for minimal-rank forms.
    pub fn alternating(len: usize) -> Self {
        SignatureVector {
            signs: (0..len)
                .map(|i| if i % 2 == 0 { Sign::Plus } else { Sign::Minus })
                .collect(),
        }
    }

    /// Number of signs (equals the rank of the form).
    pub fn len(&self) -> usize {
        self.signs.len()
    }

    /// True when the signature has no entries.
    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// The underlying signs.
    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }
}

impl fmt::Display for SignatureVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for SignatureVector {
    type Err = RealFormError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut signs = Vec::with_capacity(text.len());
        for c in text.chars() {
            match c {
                '+' => signs.push(Sign::Plus),
                '-' => signs.push(Sign::Minus),
                other => {
                    return Err(RealFormError::BadCode(format!(
                        "signature character `{other}`"
                    )))
                }
            }
        }
        Ok(SignatureVector { signs })
    }
}

/// A classical real form together with its defining parameters.
///
/// The four constructors mirror the CLI codes `sp2n-r:<n>`, `so-star:<n>`,
/// `so-pq:<p>,<q>` and `sp-pq:<p>,<q>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RealForm {
    /// The split symplectic form `Sp(2n,R)` acting on flags in `C^{2n}`.
    SpR { n: usize },
    /// The quaternionic orthogonal form `SO*(2n)` acting on flags in `C^{2n}`.
    SOStar { n: usize },
    /// The indefinite orthogonal form `SO(p,q)` (`p ≥ q ≥ 1`) acting on flags
    /// in `C^{p+q}`.
    SOpq { p: usize, q: usize },
    /// The indefinite quaternionic symplectic form `Sp(2p,2q)` (`p ≥ q ≥ 1`)
    /// acting on flags in `C^{2(p+q)}`.
    Sppq { p: usize, q: usize },
}

impl RealForm {
    /// Validated constructor for `Sp(2n,R)`.
    pub fn sp2n_r(n: usize) -> Result<Self, RealFormError> {
        if n == 0 {
            return Err(RealFormError::BadParams {
                form: "sp2n-r".into(),
                reason: "n must be at least 1".into(),
            });
        }
        Ok(RealForm::SpR { n })
    }

    /// Validated constructor for `SO*(2n)`.
    pub fn so_star(n: usize) -> Result<Self, RealFormError> {
        if n < 2 {
            return Err(RealFormError::BadParams {
                form: "so-star".into(),
                reason: "n must be at least 2".into(),
            });
        }
        Ok(RealForm::SOStar { n })
    }

    /// Validated constructor for `SO(p,q)`.
    pub fn so_pq(p: usize, q: usize) -> Result<Self, RealFormError> {
        if q < 1 || p < q {
            return Err(RealFormError::BadParams {
                form: "so-pq".into(),
                reason: "need p >= q >= 1".into(),
            });
        }
        if p + q < 3 {
            return Err(RealFormError::BadParams {
                form: "so-pq".into(),
                reason: "need p + q >= 3".into(),
            });
        }
        Ok(RealForm::SOpq { p, q })
    }

    /// Validated constructor for `Sp(2p,2q)`.
    pub fn sp_pq(p: usize, q: usize) -> Result<Self, RealFormError> {
        if q < 1 || p < q {
            return Err(RealFormError::BadParams {
                form: "sp-pq".into(),
                reason: "need p >= q >= 1".into(),
            });
        }
        Ok(RealForm::Sppq { p, q })
    }

    /// The canonical CLI code of the form.
    pub fn code(&self) -> String {
        match *self {
            RealForm::SpR { n } => format!("sp2n-r:{n}"),
            RealForm::SOStar { n } => format!("so-star:{n}"),
            RealForm::SOpq { p, q } => format!("so-pq:{p},{q}"),
            RealForm::Sppq { p, q } => format!("sp-pq:{p},{q}"),
        }
    }

    /// The rank `n`: the number of entries of the indexing signed
    /// permutations.
    pub fn rank(&self) -> usize {
        match *self {
            RealForm::SpR { n } | RealForm::SOStar { n } => n,
            RealForm::SOpq { p, q } => (p + q) / 2,
            RealForm::Sppq { p, q } => p + q,
        }
    }

    /// The ambient complex dimension `m` of the flag manifold's underlying
    /// space (`2n` or `2n+1`).
    pub fn ambient_dim(&self) -> usize {
        match *self {
            RealForm::SpR { n } | RealForm::SOStar { n } => 2 * n,
            RealForm::SOpq { p, q } => p + q,
            RealForm::Sppq { p, q } => 2 * (p + q),
        }
    }

    /// The signature parameter `p` for the indefinite forms, if any.
    pub fn p(&self) -> Option<usize> {
        match *self {
            RealForm::SOpq { p, .. } | RealForm::Sppq { p, .. } => Some(p),
            _ => None,
        }
    }

    /// The signature parameter `q` for the indefinite forms, if any.
    pub fn q(&self) -> Option<usize> {
        match *self {
            RealForm::SOpq { q, .. } | RealForm::Sppq { q, .. } => Some(q),
            _ => None,
        }
    }

    /// The Weyl family indexing Schubert cells of this form.
    pub fn weyl_family(&self) -> WeylFamily {
        match *self {
            RealForm::SpR { .. } | RealForm::Sppq { .. } => WeylFamily::FullSign,
            RealForm::SOStar { .. } => WeylFamily::EvenSign,
            RealForm::SOpq { p, q } => {
                if (p + q) % 2 == 0 {
                    WeylFamily::EvenSign
                } else {
                    WeylFamily::FullSign
                }
            }
        }
    }

    /// Complex dimension of the full flag manifold of the complexified group.
    pub fn dim_flag_manifold(&self) -> usize {
        let n = self.rank();
        match self.weyl_family() {
            WeylFamily::FullSign => n * n,
            WeylFamily::EvenSign => n * n - n,
        }
    }

    /// Complex dimension of the base cycle (the closed orbit of the real
    /// form inside the flag manifold).
    pub fn dim_base_cycle(&self) -> usize {
        match *self {
            RealForm::SpR { n } | RealForm::SOStar { n } => n * (n - 1) / 2,
            RealForm::SOpq { p, q } => {
                let even = (p + q) % 2 == 0;
                match (even, q % 2 == 0) {
                    (true, true) => p * (p - 2) / 4 + q * (q - 2) / 4,
                    (true, false) => (p - 1) * (p - 1) / 4 + (q - 1) * (q - 1) / 4,
                    (false, true) => (p - 1) * (p - 1) / 4 + q * (q - 2) / 4,
                    (false, false) => p * (p - 2) / 4 + (q - 1) * (q - 1) / 4,
                }
            }
            RealForm::Sppq { p, q } => p * p + q * q,
        }
    }

    /// Complex dimension of the Iwasawa Schubert varieties dual to the base
    /// cycle; always equals
    /// `dim_flag_manifold() - dim_base_cycle()`.
    pub fn dim_dual_schubert(&self) -> usize {
        self.dim_flag_manifold() - self.dim_base_cycle()
    }

    /// Checks that `w` lies in the Weyl group attached to this form.
    pub fn check_member(&self, w: &SignedPermutation) -> Result<(), RealFormError> {
        if w.n() == self.rank() && w.family() == self.weyl_family() {
            Ok(())
        } else {
            Err(RealFormError::GroupMismatch)
        }
    }

    /// The relabelling `psi` sending the Schubert label of a cell to the
    /// fixed-flag label of its distinguished intersection point with the base
    /// cycle.
    ///
    /// `psi` is an involution-free bijection of the Weyl group obtained by
    /// relabelling each entry independently; the entry rule depends on the
    /// form and, for `SO(p,q)`, on the parities of `p+q` and `q`.
    ///
    /// ```
    /// use flagcycle::real_forms::RealForm;
    /// use flagcycle::weyl_core::{SignedPermutation, WeylFamily};
    ///
    /// let f = RealForm::sp_pq(3, 2).unwrap();
    /// let w = SignedPermutation::new(vec![-4, 3, -2, 1, 5], WeylFamily::FullSign).unwrap();
    /// assert_eq!(f.psi(&w).unwrap().entries(), &[2, 3, 1, 4, 5]);
    /// ```
    pub fn psi(&self, w: &SignedPermutation) -> Result<SignedPermutation, RealFormError> {
        self.check_member(w)?;
        let out: Vec<i32> = w.entries().iter().map(|&x| self.psi_entry(x)).collect();
        Ok(SignedPermutation::new(out, self.weyl_family())?)
    }

    fn psi_entry(&self, x: i32) -> i32 {
        let v = x.abs();
        let s = x.signum();
        match *self {
            RealForm::SpR { .. } => -x,
            RealForm::SOStar { n } => {
                // For odd rank the extreme modulus is fixed; for even rank
                // every entry is negated (which preserves the even-sign
                // parity).
                if n % 2 == 1 && v as usize == n {
                    x
                } else {
                    -x
                }
            }
            RealForm::SOpq { p, q } => {
                let m = p + q;
                let n = (m / 2) as i32;
                let q = q as i32;
                if q % 2 == 0 {
                    if v <= q {
                        if v % 2 == 1 {
                            -s * (v + 1) / 2
                        } else {
                            -s * (q - v / 2 + 1)
                        }
                    } else {
                        x
                    }
                } else if m % 2 == 0 {
                    if v < q {
                        if v % 2 == 1 {
                            -s * (v + 1) / 2
                        } else {
                            -s * (q - v / 2)
                        }
                    } else if v == q {
                        s * n
                    } else {
                        s * (v - 1)
                    }
                } else {
                    // odd ambient dimension, odd q
                    if v < q {
                        if v % 2 == 1 {
                            -s * (v + 1) / 2
                        } else {
                            -s * (q - v / 2)
                        }
                    } else {
                        x
                    }
                }
            }
            RealForm::Sppq { q, .. } => {
                let q = q as i32;
                if v <= 2 * q {
                    if v % 2 == 1 {
                        s * (2 * q - (v + 1) / 2 + 1)
                    } else {
                        -s * (v / 2)
                    }
                } else {
                    x
                }
            }
        }
    }

    /// The Iwasawa-adapted reference basis: `m` vectors whose initial
    /// segments span the isotropic reference flag `F_I`, with
    /// `span(v_1,…,v_i)` perpendicular to `span(v_1,…,v_{m-i})` under the
    /// invariant bilinear form.
    pub fn iwasawa_basis(&self) -> Vec<ExactVector> {
        let m = self.ambient_dim();
        match *self {
            RealForm::SpR { n } => {
                let mut out: Vec<ExactVector> =
                    (1..=n).map(|j| diff(m, j, m + 1 - j)).collect();
                for j in (1..=n).rev() {
                    out.push(plus(m, j, m + 1 - j));
                }
                out
            }
            RealForm::SOStar { n } => {
                // Pairs u_j = e_j + s_j·i·e_{n+j}; each partner pair {j, n+1-j}
                // carries opposite twist signs so that the span of the first
                // half is isotropic for the antidiagonal symmetric form.
                let center = if n % 2 == 1 { Some(n / 2 + 1) } else { None };
                let twist = |j: usize| -> bool {
                    match center {
                        Some(c) => j < c,
                        None => j <= n / 2,
                    }
                };
                let pair = |j: usize, plus_twist: bool| -> ExactVector {
                    if plus_twist {
                        ipair(m, j, n + j)
                    } else {
                        ipair_neg(m, j, n + j)
                    }
                };
                // Pair slots come first in increasing modulus order; the two
                // real center vectors (odd rank only) occupy the middle
                // slots n and n+1 of the full flag.
                let mut out = Vec::with_capacity(m);
                for j in (1..=n).filter(|&j| Some(j) != center) {
                    out.push(pair(j, twist(j)));
                }
                if let Some(c) = center {
                    out.push(unit(m, c));
                    out.push(unit(m, n + c));
                }
                for j in (1..=n).rev().filter(|&j| Some(j) != center) {
                    out.push(pair(n + 1 - j, twist(j)));
                }
                out
            }
            RealForm::SOpq { p, q } => self.iwasawa_basis_sopq(p, q),
            RealForm::Sppq { p, q } => {
                let n = p + q;
                let mut first = Vec::with_capacity(n);
                for j in 1..=q {
                    first.push(plus(m, j, 2 * q - j + 1));
                    first.push(diff(m, 2 * n - 2 * q + j, 2 * n - j + 1));
                }
                for k in 2 * q + 1..=n {
                    first.push(unit(m, k));
                }
                let mut out = first;
                for k in n + 1..=2 * n - 2 * q {
                    out.push(unit(m, k));
                }
                for j in (1..=q).rev() {
                    out.push(diff(m, j, 2 * q - j + 1));
                    out.push(plus(m, 2 * n - 2 * q + j, 2 * n - j + 1));
                }
                out
            }
        }
    }

    fn iwasawa_basis_sopq(&self, p: usize, q: usize) -> Vec<ExactVector> {
        let m = p + q;
        let n = m / 2;
        if m % 2 == 0 {
            let both_odd = p % 2 == 1;
            let mut first = Vec::with_capacity(n);
            for j in 1..=q {
                if both_odd && j == q {
                    first.push(unit(m, q));
                } else {
                    first.push(plus(m, j, 2 * q + 1 - j));
                }
            }
            let mut a = 2 * q + 1;
            while a < m {
                first.push(ipair(m, a, a + 1));
                a += 2;
            }
            let mut out = first.clone();
            for k in (1..=n).rev() {
                if k > q {
                    out.push(first[k - 1].conj());
                } else if both_odd && k == q {
                    out.push(unit(m, q + 1));
                } else {
                    out.push(diff(m, k, 2 * q + 1 - k));
                }
            }
            out
        } else if q % 2 == 0 {
            // odd ambient dimension, even q: real antidiagonal pairs around
            // the center e_{q+1}
            let mut first = Vec::with_capacity(n);
            for j in 1..=q {
                first.push(plus(m, j, 2 * q + 2 - j));
            }
            let mut a = 2 * q + 2;
            while a < m {
                first.push(ipair(m, a, a + 1));
                a += 2;
            }
            let mut out = first.clone();
            out.push(unit(m, q + 1));
            for k in (1..=n).rev() {
                if k > q {
                    out.push(first[k - 1].conj());
                } else {
                    out.push(diff(m, k, 2 * q + 2 - k));
                }
            }
            out
        } else {
            // odd ambient dimension, odd q: center e_q
            let mut first = Vec::with_capacity(n);
            for j in 1..q {
                first.push(plus(m, j, 2 * q - j));
            }
            let mut a = 2 * q;
            while a < m {
                first.push(ipair(m, a, a + 1));
                a += 2;
            }
            let mut out = first.clone();
            out.push(unit(m, q));
            for k in (1..=n).rev() {
                if k > q - 1 {
                    out.push(first[k - 1].conj());
                } else {
                    out.push(diff(m, k, 2 * q - k));
                }
            }
            out
        }
    }

    /// A basis of eigenvectors of the invariant Hermitian form, each
    /// annotated with its sign, ordered so that the coordinate flags of
    /// signed-permutation labels are exactly the torus-fixed flags on the
    /// closed orbits.
    ///
    /// Slot `k` (1-based, `k ≤ n`) and slot `m+1-k` are dual under the
    /// bilinear form; for odd `m` the middle slot `n+1` holds the central
    /// vector.
    pub fn standard_fixed_eigenbasis(&self) -> Vec<(ExactVector, Sign)> {
        let m = self.ambient_dim();
        let n = self.rank();
        match *self {
            RealForm::SpR { n } | RealForm::SOStar { n } => (1..=m)
                .map(|k| {
                    let s = if k <= n { Sign::Plus } else { Sign::Minus };
                    (unit(m, k), s)
                })
                .collect(),
            RealForm::Sppq { p, q } => {
                let nn = p + q;
                (1..=m)
                    .map(|k| {
                        let s = if k <= q || k > 2 * nn - q {
                            Sign::Minus
                        } else {
                            Sign::Plus
                        };
                        (unit(m, k), s)
                    })
                    .collect()
            }
            RealForm::SOpq { p: _, q } => {
                let modd = m % 2 == 1;
                // Index pairs (a, a+1) carrying the complex eigenvectors
                // e_a ± i·e_{a+1}, skipping the real middle indices.
                let mut plist: Vec<(usize, usize)> = Vec::new();
                let mut mids: Vec<(usize, Sign)> = Vec::new();
                match (modd, q % 2 == 0) {
                    (false, true) => {
                        let mut a = 1;
                        while a < m {
                            plist.push((a, a + 1));
                            a += 2;
                        }
                    }
                    (false, false) => {
                        let mut a = 1;
                        while a + 1 < q {
                            plist.push((a, a + 1));
                            a += 2;
                        }
                        let mut a = q + 2;
                        while a < m {
                            plist.push((a, a + 1));
                            a += 2;
                        }
                        mids.push((q, Sign::Minus));
                        mids.push((q + 1, Sign::Plus));
                    }
                    (true, true) => {
                        let mut a = 1;
                        while a < q {
                            plist.push((a, a + 1));
                            a += 2;
                        }
                        let mut a = q + 2;
                        while a < m {
                            plist.push((a, a + 1));
                            a += 2;
                        }
                        mids.push((q + 1, Sign::Plus));
                    }
                    (true, false) => {
                        let mut a = 1;
                        while a + 1 < q {
                            plist.push((a, a + 1));
                            a += 2;
                        }
                        let mut a = q + 1;
                        while a < m {
                            plist.push((a, a + 1));
                            a += 2;
                        }
                        mids.push((q, Sign::Minus));
                    }
                }
                let mut first: Vec<(ExactVector, Sign)> = plist
                    .iter()
                    .map(|&(a, b)| {
                        let s = if a <= q { Sign::Minus } else { Sign::Plus };
                        (ipair(m, a, b), s)
                    })
                    .collect();
                if !modd && q % 2 == 1 {
                    // slot n holds the real vector e_q; its dual slot n+1
                    // holds e_{q+1}
                    first.push((unit(m, q), Sign::Minus));
                }
                debug_assert_eq!(first.len(), n);
                let mut out = first.clone();
                if modd {
                    let (c, s) = mids[0];
                    out.push((unit(m, c), s));
                }
                for k in (1..=n).rev() {
                    if !modd && q % 2 == 1 && k == n {
                        out.push((unit(m, q + 1), Sign::Plus));
                    } else {
                        let (v, s) = &first[k - 1];
                        out.push((v.conj(), *s));
                    }
                }
                out
            }
        }
    }

    /// The set of flag domains (open orbits) that contain torus-fixed flags,
    /// indexed by their signature vectors.
    pub fn enumerate_flag_domains(&self) -> Result<BTreeSet<SignatureVector>, RealFormError> {
        let flags = flag_oracle::enumerate_fixed_flags(self)?;
        Ok(flags
            .iter()
            .map(|f| flag_oracle::flag_signature(self, f))
            .collect())
    }
}

impl fmt::Display for RealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

impl FromStr for RealForm {
    type Err = RealFormError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = || RealFormError::BadCode(text.to_string());
        let (head, tail) = text.split_once(':').ok_or_else(bad)?;
        match head {
            "sp2n-r" => {
                let n: usize = tail.trim().parse().map_err(|_| bad())?;
                RealForm::sp2n_r(n)
            }
            "so-star" => {
                let n: usize = tail.trim().parse().map_err(|_| bad())?;
                RealForm::so_star(n)
            }
            "so-pq" | "sp-pq" => {
                let (ps, qs) = tail.split_once(',').ok_or_else(bad)?;
                let p: usize = ps.trim().parse().map_err(|_| bad())?;
                let q: usize = qs.trim().parse().map_err(|_| bad())?;
                if head == "so-pq" {
                    RealForm::so_pq(p, q)
                } else {
                    RealForm::sp_pq(p, q)
                }
            }
            _ => Err(bad()),
        }
    }
}

fn unit(m: usize, j: usize) -> ExactVector {
    ExactVector::unit(m, j)
}

/// `e_a + e_b`
fn plus(m: usize, a: usize, b: usize) -> ExactVector {
    ExactVector::unit(m, a).add(&ExactVector::unit(m, b))
}

/// `e_a - e_b`
fn diff(m: usize, a: usize, b: usize) -> ExactVector {
    ExactVector::unit(m, a).sub(&ExactVector::unit(m, b))
}

/// `e_a + i·e_b`
fn ipair(m: usize, a: usize, b: usize) -> ExactVector {
    ExactVector::unit(m, a).add(&ExactVector::unit(m, b).scale(&ExactScalar::i()))
}

/// `e_a - i·e_b`
fn ipair_neg(m: usize, a: usize, b: usize) -> ExactVector {
    ExactVector::unit(m, a).sub(&ExactVector::unit(m, b).scale(&ExactScalar::i()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_core::enumerate_group;

    fn perm(entries: &[i32], fam: WeylFamily) -> SignedPermutation {
        SignedPermutation::new(entries.to_vec(), fam).unwrap()
    }

    #[test]
    fn codes_round_trip() {
        for code in ["sp2n-r:3", "so-star:4", "so-pq:5,3", "sp-pq:3,2"] {
            let f: RealForm = code.parse().unwrap();
            assert_eq!(f.code(), code);
        }
        assert!("so-pq:2,3".parse::<RealForm>().is_err());
        assert!("nonsense".parse::<RealForm>().is_err());
        assert!("sp2n-r:x".parse::<RealForm>().is_err());
    }

    #[test]
    fn families_and_ranks() {
        let f: RealForm = "so-pq:5,3".parse().unwrap();
        assert_eq!(f.weyl_family(), WeylFamily::EvenSign);
        assert_eq!(f.rank(), 4);
        let f: RealForm = "so-pq:4,3".parse().unwrap();
        assert_eq!(f.weyl_family(), WeylFamily::FullSign);
        assert_eq!(f.rank(), 3);
        assert_eq!(f.ambient_dim(), 7);
        let f: RealForm = "sp-pq:3,2".parse().unwrap();
        assert_eq!(f.weyl_family(), WeylFamily::FullSign);
        assert_eq!(f.rank(), 5);
        assert_eq!(f.ambient_dim(), 10);
    }

    #[test]
    fn dimension_identity_small_grid() {
        let mut forms: Vec<RealForm> = Vec::new();
        for n in 1..=8 {
            forms.push(RealForm::sp2n_r(n).unwrap());
            if n >= 2 {
                forms.push(RealForm::so_star(n).unwrap());
            }
        }
        for q in 1..=4 {
            for p in q..=8 {
                if p + q >= 3 {
                    forms.push(RealForm::so_pq(p, q).unwrap());
                }
                forms.push(RealForm::sp_pq(p, q).unwrap());
            }
        }
        for f in forms {
            assert_eq!(
                f.dim_base_cycle() + f.dim_dual_schubert(),
                f.dim_flag_manifold(),
                "dimension identity fails for {f}"
            );
        }
        // closed expressions for the dual Schubert dimension
        let f = RealForm::so_pq(6, 4).unwrap();
        assert_eq!(f.dim_dual_schubert(), 6 * 4 / 2);
        let f = RealForm::so_pq(5, 3).unwrap();
        assert_eq!(f.dim_dual_schubert(), (5 * 3 - 1) / 2);
        let f = RealForm::so_pq(5, 2).unwrap();
        assert_eq!(f.dim_dual_schubert(), 5 * 2 / 2);
        let f = RealForm::sp_pq(3, 2).unwrap();
        assert_eq!(f.dim_dual_schubert(), 2 * 3 * 2);
        let f = RealForm::sp2n_r(4).unwrap();
        assert_eq!(f.dim_dual_schubert(), 4 * 5 / 2);
    }

    #[test]
    fn psi_is_a_bijection() {
        let forms: Vec<RealForm> = vec![
            "sp2n-r:3".parse().unwrap(),
            "so-star:3".parse().unwrap(),
            "so-star:4".parse().unwrap(),
            "so-pq:4,2".parse().unwrap(),
            "so-pq:5,3".parse().unwrap(),
            "so-pq:5,2".parse().unwrap(),
            "so-pq:4,3".parse().unwrap(),
            "sp-pq:2,1".parse().unwrap(),
        ];
        for f in forms {
            let n = f.rank();
            let fam = f.weyl_family();
            let group = enumerate_group(n, fam, None).unwrap();
            let images: std::collections::BTreeSet<Vec<i32>> = group
                .iter()
                .map(|w| f.psi(w).unwrap().entries().to_vec())
                .collect();
            assert_eq!(images.len(), group.len(), "psi not injective for {f}");
        }
    }

    #[test]
    fn psi_golden_values() {
        let f: RealForm = "sp-pq:3,2".parse().unwrap();
        let w = perm(&[-4, 3, -2, 1, 5], WeylFamily::FullSign);
        assert_eq!(f.psi(&w).unwrap().entries(), &[2, 3, 1, 4, 5]);

        let f: RealForm = "so-pq:5,3".parse().unwrap();
        let w = perm(&[-1, 2, 4, -3], WeylFamily::EvenSign);
        assert_eq!(f.psi(&w).unwrap().entries(), &[1, -2, 3, -4]);

        let f: RealForm = "so-pq:6,4".parse().unwrap();
        let w = perm(&[-3, 5, -1, 4, 2], WeylFamily::EvenSign);
        assert_eq!(f.psi(&w).unwrap().entries(), &[2, 5, 1, -3, -4]);

        let f: RealForm = "sp2n-r:3".parse().unwrap();
        let w = perm(&[-3, -2, -1], WeylFamily::FullSign);
        assert_eq!(f.psi(&w).unwrap().entries(), &[3, 2, 1]);
    }

    #[test]
    fn eigenbasis_has_full_size_and_dual_slots() {
        let forms: Vec<RealForm> = vec![
            "sp2n-r:2".parse().unwrap(),
            "so-star:3".parse().unwrap(),
            "so-pq:4,2".parse().unwrap(),
            "so-pq:5,3".parse().unwrap(),
            "so-pq:5,2".parse().unwrap(),
            "so-pq:4,3".parse().unwrap(),
            "sp-pq:2,1".parse().unwrap(),
        ];
        for f in forms {
            let m = f.ambient_dim();
            assert_eq!(f.iwasawa_basis().len(), m, "{f}");
            assert_eq!(f.standard_fixed_eigenbasis().len(), m, "{f}");
        }
    }
}
