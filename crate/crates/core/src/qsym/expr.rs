use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Fundamental,
    #[serde(rename = "youngqs")]
    YoungQs,
    #[serde(rename = "dualimmaculate")]
    DualImmaculate,
    Immaculate,
    #[serde(rename = "youngncschur")]
    YoungNcSchur,
}

impl Basis {
    pub const ALL: [Basis; 6] = [
        Basis::Monomial,
        Basis::Fundamental,
        Basis::YoungQs,
        Basis::DualImmaculate,
        Basis::Immaculate,
        Basis::YoungNcSchur,
    ];

    /// Bases of the quasisymmetric side; the other two only label
    /// coefficient tables.
    pub fn is_quasisymmetric(self) -> bool {
        !matches!(self, Basis::Immaculate | Basis::YoungNcSchur)
    }

    pub fn tag(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::Fundamental => "fundamental",
            Basis::YoungQs => "youngqs",
            Basis::DualImmaculate => "dualimmaculate",
            Basis::Immaculate => "immaculate",
            Basis::YoungNcSchur => "youngncschur",
        }
    }

    pub fn cli_name(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::Fundamental => "fundamental",
            Basis::YoungQs => "young-qs",
            Basis::DualImmaculate => "dual-immaculate",
            Basis::Immaculate => "immaculate",
            Basis::YoungNcSchur => "young-ncschur",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "M",
            Basis::Fundamental => "F",
            Basis::YoungQs => "Ŝ",
            Basis::DualImmaculate => "𝔖*",
            Basis::Immaculate => "𝔖",
            Basis::YoungNcSchur => "ŝ",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| !matches!(c, '-' | '_')).collect::<String>().to_lowercase();
        Ok(match key.as_str() {
            "m" | "monomial" => Basis::Monomial,
            "f" | "fundamental" => Basis::Fundamental,
            "youngqs" | "yqs" => Basis::YoungQs,
            "dualimmaculate" | "dimm" => Basis::DualImmaculate,
            "immaculate" | "imm" => Basis::Immaculate,
            "youngncschur" | "yns" => Basis::YoungNcSchur,
            _ => return Err(Error::UnknownBasis(s.to_string())),
        })
    }
}

/// Sparse integer coefficients indexed by compositions. Zero coefficients
/// are never stored.
pub type Coeffs = BTreeMap<Composition, i64>;

fn checked_add_into(map: &mut Coeffs, key: &Composition, value: i64) -> Result<()> {
    if value == 0 {
        return Ok(());
    }
    let slot = map.entry(key.clone()).or_insert(0);
    *slot = slot.checked_add(value).ok_or(Error::Overflow)?;
    if *slot == 0 {
        map.remove(key);
    }
    Ok(())
}

/// A homogeneous quasisymmetric function in the monomial basis.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawExpr", into = "RawExpr")]
pub struct MExpr {
    degree: u32,
    coeffs: Coeffs,
}

impl MExpr {
    pub fn zero(degree: u32) -> Self {
        MExpr { degree, coeffs: Coeffs::new() }
    }

    pub fn monomial(alpha: &Composition) -> Self {
        let mut coeffs = Coeffs::new();
        coeffs.insert(alpha.clone(), 1);
        MExpr { degree: alpha.size(), coeffs }
    }

    pub fn from_coeffs(degree: u32, coeffs: Coeffs) -> Result<Self> {
        let mut out = MExpr::zero(degree);
        for (alpha, c) in coeffs {
            out.add_term(&alpha, c)?;
        }
        Ok(out)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &Coeffs {
        &self.coeffs
    }

    pub fn coeff(&self, alpha: &Composition) -> i64 {
        self.coeffs.get(alpha).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, alpha: &Composition, c: i64) -> Result<()> {
        if alpha.size() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: alpha.size() });
        }
        checked_add_into(&mut self.coeffs, alpha, c)
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &MExpr, c: i64) -> Result<()> {
        if other.degree != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        for (alpha, &v) in &other.coeffs {
            checked_add_into(&mut self.coeffs, alpha, v.checked_mul(c).ok_or(Error::Overflow)?)?;
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MExpr) -> Result<MExpr> {
        let mut out = self.clone();
        out.add_scaled(other, 1)?;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MExpr) -> Result<MExpr> {
        let mut out = self.clone();
        out.add_scaled(other, -1)?;
        Ok(out)
    }

    /// Coefficients are constant on rearrangement classes.
    pub fn is_symmetric(&self) -> bool {
        crate::composition::compositions_of(self.degree, None)
            .iter()
            .all(|gamma| self.coeff(gamma) == self.coeff(&gamma.sorted_decreasing()))
    }
}

impl fmt::Display for MExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, Basis::Monomial, &self.coeffs)
    }
}

impl fmt::Debug for MExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MExpr[{self}]")
    }
}

/// A coefficient table in a named basis.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawExpansion", into = "RawExpansion")]
pub struct BasisExpansion {
    basis: Basis,
    degree: u32,
    coeffs: Coeffs,
}

impl BasisExpansion {
    pub fn zero(basis: Basis, degree: u32) -> Self {
        BasisExpansion { basis, degree, coeffs: Coeffs::new() }
    }

    pub fn from_coeffs(basis: Basis, degree: u32, coeffs: Coeffs) -> Result<Self> {
        let mut out = BasisExpansion::zero(basis, degree);
        for (alpha, c) in coeffs {
            out.add_term(&alpha, c)?;
        }
        Ok(out)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &Coeffs {
        &self.coeffs
    }

    pub fn coeff(&self, alpha: &Composition) -> i64 {
        self.coeffs.get(alpha).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, alpha: &Composition, c: i64) -> Result<()> {
        if alpha.size() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: alpha.size() });
        }
        checked_add_into(&mut self.coeffs, alpha, c)
    }

    pub fn add_scaled(&mut self, other: &BasisExpansion, c: i64) -> Result<()> {
        if other.degree != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        for (alpha, &v) in &other.coeffs {
            checked_add_into(&mut self.coeffs, alpha, v.checked_mul(c).ok_or(Error::Overflow)?)?;
        }
        Ok(())
    }

    pub fn sum(&self) -> Result<i64> {
        self.coeffs.values().try_fold(0i64, |acc, &c| acc.checked_add(c).ok_or(Error::Overflow))
    }

    /// Monomial expansion; only defined for quasisymmetric bases.
    pub fn to_mexpr(&self) -> Result<MExpr> {
        let mut out = MExpr::zero(self.degree);
        for (alpha, &c) in &self.coeffs {
            out.add_scaled(&super::basis_element(self.basis, alpha)?, c)?;
        }
        Ok(out)
    }
}

impl fmt::Display for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.basis, &self.coeffs)
    }
}

impl fmt::Debug for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{self}]", self.basis.tag())
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, basis: Basis, coeffs: &Coeffs) -> fmt::Result {
    if coeffs.is_empty() {
        return f.write_str("0");
    }
    for (i, (alpha, &c)) in coeffs.iter().enumerate() {
        let sign = if c < 0 { "-" } else { "+" };
        match (i, c < 0) {
            (0, false) => {}
            (0, true) => f.write_str("-")?,
            _ => write!(f, " {sign} ")?,
        }
        if c.unsigned_abs() != 1 {
            write!(f, "{}", c.unsigned_abs())?;
        }
        write!(f, "{}({alpha})", basis.symbol())?;
    }
    Ok(())
}

/// JSON form: `{"degree": 3, "coeffs": {"2,1": 1}}` with keys in canonical
/// composition order.
#[derive(Serialize, Deserialize)]
struct RawExpr {
    degree: u32,
    coeffs: KeyedCoeffs,
}

#[derive(Serialize, Deserialize)]
struct RawExpansion {
    basis: Basis,
    degree: u32,
    coeffs: KeyedCoeffs,
}

impl TryFrom<RawExpr> for MExpr {
    type Error = Error;
    fn try_from(raw: RawExpr) -> Result<Self> {
        MExpr::from_coeffs(raw.degree, raw.coeffs.0)
    }
}

impl From<MExpr> for RawExpr {
    fn from(e: MExpr) -> Self {
        RawExpr { degree: e.degree, coeffs: KeyedCoeffs(e.coeffs) }
    }
}

impl TryFrom<RawExpansion> for BasisExpansion {
    type Error = Error;
    fn try_from(raw: RawExpansion) -> Result<Self> {
        BasisExpansion::from_coeffs(raw.basis, raw.degree, raw.coeffs.0)
    }
}

impl From<BasisExpansion> for RawExpansion {
    fn from(e: BasisExpansion) -> Self {
        RawExpansion { basis: e.basis, degree: e.degree, coeffs: KeyedCoeffs(e.coeffs) }
    }
}

/// A coefficient map whose keys serialize as "a,b,c" strings.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KeyedCoeffs(pub Coeffs);

impl Serialize for KeyedCoeffs {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (alpha, c) in &self.0 {
            map.serialize_entry(&alpha.to_string(), c)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for KeyedCoeffs {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, i64>::deserialize(deserializer)?;
        let mut out = Coeffs::new();
        for (k, v) in raw {
            let alpha: Composition = k.parse().map_err(serde::de::Error::custom)?;
            checked_add_into(&mut out, &alpha, v).map_err(serde::de::Error::custom)?;
        }
        Ok(KeyedCoeffs(out))
    }
}
