//! Simple GL(P) labels `χ^q ξ^ε T_r`, GL(m+nP) weights and odd reflections.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The label `χ^q ξ^ε T_r` of a simple GL(P)-representation.
///
/// Invariants: `r < 4`, and `r == 2` implies `!xi`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GlpLabel {
    q: i64,
    r: u8,
    xi: bool,
}

impl GlpLabel {
    pub const TRIVIAL: GlpLabel = GlpLabel { q: 0, r: 0, xi: false };

    pub fn new(q: i64, r: u8, xi: bool) -> Result<Self> {
        if r > 3 {
            return Err(Error::InvalidLabel(format!("T index {r} out of range 0..=3")));
        }
        if r == 2 && xi {
            return Err(Error::InvalidLabel("ξT2 is not a simple label".into()));
        }
        Ok(GlpLabel { q, r, xi })
    }

    pub(crate) const fn raw(q: i64, r: u8, xi: bool) -> Self {
        GlpLabel { q, r, xi }
    }

    /// `T_k` for any `k ≥ 0`, read as `χ^{k div 4} T_{k mod 4}`.
    pub fn t(k: u64) -> Self {
        GlpLabel { q: (k / 4) as i64, r: (k % 4) as u8, xi: false }
    }

    pub fn chi_pow(q: i64) -> Self {
        GlpLabel { q, r: 0, xi: false }
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    pub fn xi(&self) -> bool {
        self.xi
    }

    pub fn degree(&self) -> i64 {
        4 * self.q + self.r as i64
    }

    pub fn is_trivial(&self) -> bool {
        *self == Self::TRIVIAL
    }

    /// A pure power of `χ`.
    pub fn is_chi_power(&self) -> bool {
        self.r == 0 && !self.xi
    }

    /// Multiplies by `χ^k`.
    pub fn chi_mul(self, k: i64) -> Self {
        GlpLabel { q: self.q + k, ..self }
    }

    /// The same label with the `χ` power removed.
    pub fn base(self) -> Self {
        GlpLabel { q: 0, ..self }
    }

    /// Unicode rendering, e.g. `χ²ξT₁`.
    pub fn pretty(&self) -> String {
        if self.is_trivial() {
            return "𝟙".into();
        }
        let mut s = String::new();
        if self.q != 0 {
            s.push('χ');
            if self.q != 1 {
                s.push_str(&superscript(self.q));
            }
        }
        if self.xi {
            s.push('ξ');
        }
        if self.r != 0 {
            s.push('T');
            s.push(['₀', '₁', '₂', '₃'][self.r as usize]);
        }
        s
    }
}

fn superscript(n: i64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut s = String::new();
    if n < 0 {
        s.push('⁻');
    }
    for c in n.unsigned_abs().to_string().chars() {
        s.push(DIGITS[c.to_digit(10).unwrap() as usize]);
    }
    s
}

/// Polynomial simple GL(P) labels: `𝟙`, `T_i (i ≥ 1)`, `χ^i (i ≥ 0)`,
/// `ξχ^i (i ≥ 1)`, `ξT_{4i+1} (i ≥ 1)` and `ξT_{4i+3} (i ≥ 0)`.
pub fn is_polynomial_glp(label: GlpLabel) -> bool {
    match (label.xi, label.r) {
        (false, _) => label.q >= 0,
        (true, 0) | (true, 1) => label.q >= 1,
        (true, 3) => label.q >= 0,
        _ => false,
    }
}

impl fmt::Display for GlpLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.q != 0 {
            parts.push(format!("x^{}", self.q));
        }
        if self.xi {
            parts.push("xi".to_string());
        }
        if self.r != 0 {
            parts.push(format!("T{}", self.r));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Debug for GlpLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

/// `*`-separated factors drawn from `1`, `x`, `x^q`, `chi`, `chi^q`, `xi`
/// and `Tk`; e.g. `x^2*xi*T1`.
impl FromStr for GlpLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("bad label `{s}`: {why}"));
        let t = s.trim();
        if t.is_empty() {
            return Err(bad("empty"));
        }
        let mut q = 0i64;
        let mut xi = false;
        let mut seen_t = false;
        let mut r = 0u8;
        for factor in t.split('*').map(str::trim) {
            if factor == "1" {
                continue;
            }
            if factor == "xi" || factor == "ξ" {
                if xi {
                    return Err(bad("repeated xi"));
                }
                xi = true;
            } else if let Some(rest) = factor
                .strip_prefix("chi")
                .or_else(|| factor.strip_prefix("χ"))
                .or_else(|| factor.strip_prefix('x'))
            {
                let exp = match rest.strip_prefix('^') {
                    Some(e) => e.trim().parse::<i64>().map_err(|_| bad("bad exponent"))?,
                    None if rest.is_empty() => 1,
                    None => return Err(bad("unknown factor")),
                };
                q += exp;
            } else if let Some(rest) = factor.strip_prefix('T') {
                if seen_t {
                    return Err(bad("repeated T factor"));
                }
                seen_t = true;
                let k = rest.trim().parse::<u64>().map_err(|_| bad("bad T index"))?;
                q += (k / 4) as i64;
                r = (k % 4) as u8;
            } else {
                return Err(bad("unknown factor"));
            }
        }
        GlpLabel::new(q, r, xi)
    }
}

/// A GL(m+nP) weight `λ|Λ ∈ ℤ^m × 𝐓^n`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Weight {
    pub zpart: Vec<i64>,
    pub tpart: Vec<GlpLabel>,
}

impl Weight {
    pub fn new(zpart: Vec<i64>, tpart: Vec<GlpLabel>) -> Self {
        Weight { zpart, tpart }
    }

    pub fn degree(&self) -> i64 {
        self.zpart.iter().sum::<i64>() + self.tpart.iter().map(GlpLabel::degree).sum::<i64>()
    }

    /// `zpart` and the degrees of `tpart` are both nonincreasing.
    pub fn is_dominant(&self) -> bool {
        self.zpart.windows(2).all(|w| w[0] >= w[1])
            && self.tpart.windows(2).all(|w| w[0].degree() >= w[1].degree())
    }

    pub fn pretty(&self) -> String {
        let z: Vec<String> = self.zpart.iter().map(i64::to_string).collect();
        let t: Vec<String> = self.tpart.iter().map(GlpLabel::pretty).collect();
        format!("({} | {})", z.join(","), t.join(","))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z: Vec<String> = self.zpart.iter().map(i64::to_string).collect();
        let t: Vec<String> = self.tpart.iter().map(GlpLabel::to_string).collect();
        write!(f, "{}|{}", z.join(","), t.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

/// `z1,z2,…|label1,label2,…`; either side may be empty.
impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (z, t) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("weight `{s}` lacks `|`")))?;
        let zpart = split_nonempty(z)
            .map(|p| p.parse::<i64>().map_err(|_| Error::Parse(format!("bad integer `{p}`"))))
            .collect::<Result<Vec<_>>>()?;
        let tpart = split_nonempty(t).map(str::parse).collect::<Result<Vec<_>>>()?;
        Ok(Weight { zpart, tpart })
    }
}

fn split_nonempty(s: &str) -> impl Iterator<Item = &str> {
    let t = s.trim();
    t.split(',').map(str::trim).filter(move |_| !t.is_empty())
}

/// The base labels `ξ^ε T_r` in table order.
const BASE_LABELS: [GlpLabel; 7] = [
    GlpLabel::raw(0, 0, false),
    GlpLabel::raw(0, 0, true),
    GlpLabel::raw(0, 1, false),
    GlpLabel::raw(0, 1, true),
    GlpLabel::raw(0, 2, false),
    GlpLabel::raw(0, 3, false),
    GlpLabel::raw(0, 3, true),
];

/// The odd reflection `R(α|T) = β|T'` on base labels, for `α ∈ {0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionTable {
    /// Indexed by `[α][position of T in BASE_LABELS]`.
    entries: [[(i64, GlpLabel); 7]; 2],
}

impl ReflectionTable {
    /// The degree-preserving table.
    pub fn corrected() -> Self {
        let g = GlpLabel::raw;
        ReflectionTable {
            entries: [
                [
                    (0, g(0, 0, false)),
                    (-1, g(0, 1, true)),
                    (-2, g(0, 3, true)),
                    (-1, g(0, 2, false)),
                    (-1, g(0, 3, true)),
                    (-2, g(1, 1, true)),
                    (-1, g(1, 0, false)),
                ],
                [
                    (0, g(0, 1, false)),
                    (1, g(0, 0, true)),
                    (0, g(0, 2, false)),
                    (-1, g(0, 3, false)),
                    (0, g(0, 3, false)),
                    (0, g(1, 0, true)),
                    (-1, g(1, 1, false)),
                ],
            ],
        }
    }

    /// The table with `R(0|T₃) = −2|ξT₁`, which does not preserve degree.
    pub fn printed() -> Self {
        let mut t = Self::corrected();
        t.entries[0][5] = (-2, GlpLabel::raw(0, 1, true));
        t
    }

    pub fn lookup(&self, alpha: u8, base: GlpLabel) -> (i64, GlpLabel) {
        let pos = BASE_LABELS
            .iter()
            .position(|b| *b == base)
            .expect("base label has q = 0 and satisfies the label invariant");
        self.entries[alpha as usize][pos]
    }

    /// All 14 entries as `((α, T), (β, T'))`.
    pub fn entries(&self) -> Vec<((i64, GlpLabel), (i64, GlpLabel))> {
        (0..2u8)
            .flat_map(|a| BASE_LABELS.iter().map(move |&b| ((a as i64, b), self.lookup(a, b))))
            .collect()
    }

    /// Entries `(α|T)` whose image changes total degree.
    pub fn degree_violations(&self) -> Vec<((i64, GlpLabel), (i64, GlpLabel))> {
        self.entries()
            .into_iter()
            .filter(|((a, t), (b, u))| a + t.degree() != b + u.degree())
            .collect()
    }

    /// `R(2k + α | χ^ℓ T) = 2k + β | χ^ℓ T'`.
    pub fn reflect(&self, lam: i64, label: GlpLabel) -> (i64, GlpLabel) {
        let alpha = lam.rem_euclid(2);
        let k2 = lam - alpha;
        let (beta, image) = self.lookup(alpha as u8, label.base());
        (k2 + beta, image.chi_mul(label.q))
    }

    /// `R_{ij}` on a weight, with 1-indexed `i ≤ m` and `j ≤ n`.
    pub fn reflect_weight(&self, w: &Weight, i: usize, j: usize) -> Result<Weight> {
        if i == 0 || i > w.zpart.len() {
            return Err(Error::IndexOutOfRange { what: "zpart", index: i, len: w.zpart.len() });
        }
        if j == 0 || j > w.tpart.len() {
            return Err(Error::IndexOutOfRange { what: "tpart", index: j, len: w.tpart.len() });
        }
        let mut out = w.clone();
        let (lam, label) = self.reflect(w.zpart[i - 1], w.tpart[j - 1]);
        out.zpart[i - 1] = lam;
        out.tpart[j - 1] = label;
        Ok(out)
    }

    /// Applies `R_{m,1}, …, R_{1,1}`, then `R_{m,2}, …, R_{1,2}`, and so on
    /// through column `n`.
    pub fn borel_chain(&self, w: &Weight) -> Weight {
        let mut out = w.clone();
        for j in 0..out.tpart.len() {
            for i in (0..out.zpart.len()).rev() {
                let (lam, label) = self.reflect(out.zpart[i], out.tpart[j]);
                out.zpart[i] = lam;
                out.tpart[j] = label;
            }
        }
        out
    }
}

impl Default for ReflectionTable {
    fn default() -> Self {
        Self::corrected()
    }
}

/// `R(lam|label)` with the degree-preserving table.
pub fn reflect(lam: i64, label: GlpLabel) -> (i64, GlpLabel) {
    ReflectionTable::corrected().reflect(lam, label)
}

/// `R_{ij}` with the degree-preserving table.
pub fn reflect_weight(w: &Weight, i: usize, j: usize) -> Result<Weight> {
    ReflectionTable::corrected().reflect_weight(w, i, j)
}

/// The Borel-change chain with the degree-preserving table.
pub fn borel_chain(w: &Weight) -> Weight {
    ReflectionTable::corrected().borel_chain(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> GlpLabel {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(GlpLabel::TRIVIAL.degree(), 0);
        assert_eq!(l("x").degree(), 4);
        assert_eq!(l("xi*T3").degree(), 3);
        assert_eq!(l("x^-1*T1").degree(), -3);
    }

    #[test]
    fn polynomial_labels() {
        assert!(!is_polynomial_glp(l("xi")));
        assert!(is_polynomial_glp(l("T2")));
        assert!(is_polynomial_glp(l("xi*T3")));
        assert!(is_polynomial_glp(l("1")));
        assert!(!is_polynomial_glp(l("xi*T1")));
        assert!(is_polynomial_glp(l("x*xi*T1")));
        assert!(is_polynomial_glp(l("x*xi")));
        assert!(!is_polynomial_glp(l("x^-1*T3")));
    }

    #[test]
    fn label_invariants_enforced() {
        assert!(GlpLabel::new(0, 2, true).is_err());
        assert!(GlpLabel::new(0, 4, false).is_err());
        assert!("xi*T2".parse::<GlpLabel>().is_err());
        assert!("y".parse::<GlpLabel>().is_err());
        assert!("".parse::<GlpLabel>().is_err());
    }

    #[test]
    fn label_syntax() {
        assert_eq!(l("x^2*xi*T1"), GlpLabel::new(2, 1, true).unwrap());
        assert_eq!(l("T7"), GlpLabel::new(1, 3, false).unwrap());
        assert_eq!(l("T4"), l("x"));
        assert_eq!(l("chi^3"), GlpLabel::chi_pow(3));
        assert_eq!(l("1"), GlpLabel::TRIVIAL);
        assert_eq!(l("x^2*xi*T1").to_string(), "x^2*xi*T1");
        assert_eq!(GlpLabel::TRIVIAL.to_string(), "1");
        assert_eq!(l("x^2*xi*T1").pretty(), "χ²ξT₁");
        assert_eq!(l("x^-1").pretty(), "χ⁻¹");
        assert_eq!(GlpLabel::TRIVIAL.pretty(), "𝟙");
    }

    #[test]
    fn weight_syntax() {
        let x = w("2,1|x^1*T1,T1");
        assert_eq!(x.zpart, vec![2, 1]);
        assert_eq!(x.tpart, vec![l("x*T1"), l("T1")]);
        assert_eq!(x.to_string().parse::<Weight>().unwrap(), x);
        assert_eq!(w("|"), Weight::default());
        assert_eq!(w("|T1").zpart.len(), 0);
        assert!("2,1".parse::<Weight>().is_err());
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(reflect(1, GlpLabel::TRIVIAL), (0, l("T1")));
        assert_eq!(reflect(0, l("xi")), (-1, l("xi*T1")));
        assert_eq!(reflect(3, l("x*xi")), (3, l("x*xi")));
        assert_eq!(reflect(2, l("T3")), (0, l("x*xi*T1")));
        assert_eq!(reflect(0, GlpLabel::TRIVIAL), (0, GlpLabel::TRIVIAL));
        assert_eq!(reflect(1, l("T2")), (0, l("T3")));
        assert_eq!(reflect(-1, l("T1")), (-2, l("T2")));
    }

    #[test]
    fn printed_table_differs_in_one_entry() {
        let printed = ReflectionTable::printed();
        let corrected = ReflectionTable::corrected();
        assert!(corrected.degree_violations().is_empty());
        let bad = printed.degree_violations();
        assert_eq!(bad, vec![((0, l("T3")), (-2, l("xi*T1")))]);
        let differing = printed
            .entries()
            .into_iter()
            .zip(corrected.entries())
            .filter(|(a, b)| a != b)
            .count();
        assert_eq!(differing, 1);
    }

    #[test]
    fn reflect_weight_examples() {
        assert_eq!(reflect_weight(&w("1|1"), 1, 1).unwrap(), w("0|T1"));
        assert_eq!(reflect_weight(&w("0|1"), 1, 1).unwrap(), w("0|1"));
        assert_eq!(reflect_weight(&w("2,1|1,T2"), 2, 2).unwrap(), w("2,0|1,T3"));
        assert!(matches!(
            reflect_weight(&w("1|1"), 2, 1),
            Err(Error::IndexOutOfRange { what: "zpart", .. })
        ));
        assert!(reflect_weight(&w("1|1"), 1, 0).is_err());
    }

    #[test]
    fn borel_chain_examples() {
        assert_eq!(borel_chain(&w("1,1,1|1")), w("0,0,0|T3"));
        assert_eq!(borel_chain(&w("0,0|x,x^2,1")), w("0,0|x,x^2,1"));
        assert_eq!(borel_chain(&w("|T1,x")), w("|T1,x"));
        assert_eq!(borel_chain(&w("5,3|")), w("5,3|"));
    }

    #[test]
    fn dominance() {
        assert!(w("2,1|x,T1").is_dominant());
        assert!(!w("1,2|").is_dominant());
        assert!(w("|").is_dominant());
        assert!(!w("|T1,T2").is_dominant());
    }
}
