use std::fmt;

use serde::Serialize;

use super::{Minors, Pencil, PencilError};
use crate::field::{FieldOps, FiniteField, Rationals};
use crate::polyalg::{discriminant, resultant_with_degrees, UniPoly};

/// Classification of a pencil by its degeneracy conditions.
///
/// `Case1..Case8` index the eight combinations of the conditions
/// `C1: mu23 = 0`, `C2: d = 0`, `C3: c3_scalar = 0` as
/// `1 + 4 C1 + 2 C2 + C3`. The other kinds cover pencils where `P` and `Q`
/// share a factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseKind {
    /// `P` and `Q` share exactly a linear factor.
    CommonFactorDeg1,
    /// `P` and `Q` are proportional cubics.
    CommonFactorDeg3,
    /// `P` and `Q` are proportional of degree below 3.
    Proportional,
    Case1,
    Case2,
    Case3,
    Case4,
    Case5,
    Case6,
    Case7,
    Case8,
}

impl CaseKind {
    pub const ALL: [CaseKind; 11] = [
        CaseKind::CommonFactorDeg1,
        CaseKind::CommonFactorDeg3,
        CaseKind::Proportional,
        CaseKind::Case1,
        CaseKind::Case2,
        CaseKind::Case3,
        CaseKind::Case4,
        CaseKind::Case5,
        CaseKind::Case6,
        CaseKind::Case7,
        CaseKind::Case8,
    ];

    /// `Case{n}` for `1 <= n <= 8`.
    pub fn case(n: u8) -> Option<Self> {
        (1..=8).contains(&n).then(|| Self::ALL[n as usize + 2])
    }

    /// The row number `1..=8`, if any.
    pub fn row(self) -> Option<u8> {
        Self::ALL[3..]
            .iter()
            .position(|&k| k == self)
            .map(|i| i as u8 + 1)
    }

    pub fn is_proportional(self) -> bool {
        matches!(self, Self::Proportional | Self::CommonFactorDeg3)
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::CommonFactorDeg1 => "CommonFactorDeg1",
            Self::CommonFactorDeg3 => "CommonFactorDeg3",
            Self::Proportional => "Proportional",
            Self::Case1 => "Case1",
            Self::Case2 => "Case2",
            Self::Case3 => "Case3",
            Self::Case4 => "Case4",
            Self::Case5 => "Case5",
            Self::Case6 => "Case6",
            Self::Case7 => "Case7",
            Self::Case8 => "Case8",
        }
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of classification over `Q` or over a finite field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CaseLabel {
    pub kind: CaseKind,
    /// `mu23 = 0`.
    pub c1: bool,
    /// `d = 0`.
    pub c2: bool,
    /// The cubic scalar in the minors vanishes.
    pub c3: bool,
    /// `Case1` with `Res(P, Q) != 0` and `disc(S) != 0`.
    pub typical: bool,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if self.typical {
            write!(f, " (typical)")?;
        }
        Ok(())
    }
}

/// Classifies the pencil with coefficient arrays `a`, `b` (constant term
/// first) over an arbitrary field.
pub fn classify_over<F: FieldOps>(
    field: &F,
    a: &[F::Scalar; 4],
    b: &[F::Scalar; 4],
) -> Result<CaseLabel, PencilError> {
    let minors = Minors::new(field, a, b);
    let c1 = field.is_zero(minors.get(2, 3));
    let c2 = field.is_zero(&minors.d(field));
    let c3 = field.is_zero(&minors.c3_scalar(field));
    let label = |kind, typical| CaseLabel {
        kind,
        c1,
        c2,
        c3,
        typical,
    };
    let p = UniPoly::new(field, a.to_vec());
    let q = UniPoly::new(field, b.to_vec());
    if minors.all_zero(field) {
        let kind = if p.degree() == Some(3) {
            CaseKind::CommonFactorDeg3
        } else {
            CaseKind::Proportional
        };
        return Ok(label(kind, false));
    }
    match p.gcd(field, &q).degree() {
        Some(1) => return Ok(label(CaseKind::CommonFactorDeg1, false)),
        Some(2) => return Err(PencilError::SingularFamily),
        _ => {}
    }
    let row = 1 + 4 * u8::from(c1) + 2 * u8::from(c2) + u8::from(c3);
    let kind = CaseKind::case(row).expect("row in 1..=8");
    let typical = kind == CaseKind::Case1 && {
        let res = resultant_with_degrees(field, &p, 3, &q, 3)?;
        let s = minors.s_closed_form(field);
        !field.is_zero(&res) && discriminant(field, &s).is_ok_and(|d| !field.is_zero(&d))
    };
    Ok(label(kind, typical))
}

/// Classification over `Q`.
pub fn classify(pencil: &Pencil) -> Result<CaseLabel, PencilError> {
    classify_over(&Rationals, pencil.a(), pencil.b())
}

/// Classification of the reduction into a field of odd characteristic.
pub fn classify_mod_p<F: FiniteField>(pencil: &Pencil, field: &F) -> Result<CaseLabel, PencilError> {
    if !field.is_odd() {
        return Err(PencilError::EvenCharacteristic {
            p: field.characteristic(),
        });
    }
    let r = pencil.reduce_or_err(field)?;
    classify_over(field, &r.a, &r.b)
}
