//! Explicit loxodromic elements built from a cusp's parabolic generator.
//!
//! Two families are constructed. The first starts from a parabolic
//! translation `β = [[1, l], [0, 1]]` fixing ∞ and an element
//! `γ = [[a, −1/c], [c, 0]]` (`|c| = 1`) sending `H_∞` to a full-sized
//! horoball; the products `β^{±n}γ` have traces `a ± ncl` and at least one
//! of each pair is loxodromic. The second conjugates a parabolic fixing 0
//! against the translation: `(β⁻¹)ⁿγ` with `γ = [[1, 0], [ω, 1]]`, whose
//! trace is `2 + nlω`. The perpendicular choice `ω = il` gives
//! `|tr| = √(n²l⁴ + 4)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::moebius::{IsometryClass, MoebiusError, MoebiusMap};
use crate::tolerance;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WitnessError {
    #[error("translation length must be positive, got {0}")]
    NonpositiveLength(f64),
    #[error("|c| must be 1, got {0}")]
    NotUnitModulus(f64),
    #[error("a = 0 gives a trace-zero (elliptic) element")]
    ZeroTrace,
    #[error("domain error: {0}")]
    Domain(String),
    /// Both `β^{n}γ` and `β^{-n}γ` came out parabolic. Impossible for valid
    /// parameters; seeing it means the inputs broke an invariant.
    #[error("both products are parabolic (n = {n})")]
    BothParabolic { n: u32 },
    #[error("neither product is loxodromic (n = {n})")]
    NoLoxodromic { n: u32 },
    #[error(transparent)]
    Moebius(#[from] MoebiusError),
}

fn require_long_translation(l: f64) -> Result<(), WitnessError> {
    if !(l.is_finite() && l > 2.0 * PI) {
        return Err(WitnessError::Domain(format!(
            "translation length l = {l} must exceed 2π"
        )));
    }
    Ok(())
}

fn require_rank(n: u32) -> Result<(), WitnessError> {
    if n == 0 {
        return Err(WitnessError::Domain("n must be at least 1".into()));
    }
    Ok(())
}

/// Parameters of the full-sized-horoball family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessParams {
    l: f64,
    a: Complex64,
    c: Complex64,
    n: u32,
}

impl WitnessParams {
    /// Checks `l > 2π`, `|c| = 1`, `a ≠ 0` and `n ≥ 1`.
    pub fn new(l: f64, a: Complex64, c: Complex64, n: u32) -> Result<Self, WitnessError> {
        require_long_translation(l)?;
        require_rank(n)?;
        check_gamma_entries(a, c)?;
        Ok(Self { l, a, c, n })
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

fn check_gamma_entries(a: Complex64, c: Complex64) -> Result<(), WitnessError> {
    if (c.norm() - 1.0).abs() > tolerance::ALGEBRA {
        return Err(WitnessError::NotUnitModulus(c.norm()));
    }
    if a == Complex64::new(0.0, 0.0) {
        return Err(WitnessError::ZeroTrace);
    }
    Ok(())
}

/// `[[1, l], [0, 1]]`.
pub fn parabolic_translation(l: f64) -> Result<MoebiusMap, WitnessError> {
    if !(l.is_finite() && l > 0.0) {
        return Err(WitnessError::NonpositiveLength(l));
    }
    Ok(MoebiusMap::from_real(1.0, l, 0.0, 1.0)?)
}

/// `[[a, −1/c], [c, 0]]`, which carries `H_∞` onto the full-sized ball at `a/c`.
pub fn full_sized_gamma(a: Complex64, c: Complex64) -> Result<MoebiusMap, WitnessError> {
    check_gamma_entries(a, c)?;
    Ok(MoebiusMap::new(a, -c.inv(), c, Complex64::new(0.0, 0.0))?)
}

/// A constructed element together with its raw trace and class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub map: MoebiusMap,
    pub trace: Complex64,
    pub class: IsometryClass,
}

impl Witness {
    fn of(map: MoebiusMap) -> Self {
        Self {
            map,
            trace: map.raw_trace(),
            class: map.class(),
        }
    }
}

/// Which of `β^{n}γ`, `β^{-n}γ` was picked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

/// `β^{n}γ`, `β^{-n}γ` and the loxodromic one selected from them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TranslatePair {
    pub plus: Witness,
    pub minus: Witness,
    pub chosen: Sign,
}

impl TranslatePair {
    pub fn chosen(&self) -> &Witness {
        match self.chosen {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }
}

/// Builds `β^{±n}γ` by matrix products and picks a loxodromic member,
/// preferring the smaller trace modulus (ties go to `β^{n}γ`).
pub fn translate_pair(params: &WitnessParams) -> Result<TranslatePair, WitnessError> {
    let beta = parabolic_translation(params.l)?;
    let gamma = full_sized_gamma(params.a, params.c)?;
    let n = i64::from(params.n);
    let plus = Witness::of(beta.pow(n).compose(&gamma));
    let minus = Witness::of(beta.pow(-n).compose(&gamma));

    let lox = |w: &Witness| w.class == IsometryClass::Loxodromic;
    let chosen = match (lox(&plus), lox(&minus)) {
        (true, true) if minus.trace.norm() < plus.trace.norm() => Sign::Minus,
        (true, _) => Sign::Plus,
        (false, true) => Sign::Minus,
        (false, false) => {
            return Err(
                if plus.class == IsometryClass::Parabolic && minus.class == IsometryClass::Parabolic
                {
                    WitnessError::BothParabolic { n: params.n }
                } else {
                    WitnessError::NoLoxodromic { n: params.n }
                },
            )
        }
    };
    Ok(TranslatePair {
        plus,
        minus,
        chosen,
    })
}

/// Trace bound for the translate family when `|a| > 2`:
/// `√((n − ½)² l² + V_c² / l²)`.
pub fn far_center_bound(n: u32, l: f64, vc: f64) -> Result<f64, WitnessError> {
    require_rank(n)?;
    require_long_translation(l)?;
    if !(vc.is_finite() && vc > 0.0) {
        return Err(WitnessError::Domain(format!(
            "cusp area V_c = {vc} must be positive"
        )));
    }
    Ok(far_center_formula(f64::from(n), l, vc))
}

pub(crate) fn far_center_formula(n: f64, l: f64, vc: f64) -> f64 {
    let h = n - 0.5;
    (h * h * l * l + vc * vc / (l * l)).sqrt()
}

/// Trace bound for the translate family when `|a| ≤ 2`: `√(l² n² + 4)`.
pub fn near_center_bound(n: u32, l: f64) -> Result<f64, WitnessError> {
    require_rank(n)?;
    require_long_translation(l)?;
    Ok(near_center_formula(f64::from(n), l))
}

pub(crate) fn near_center_formula(n: f64, l: f64) -> f64 {
    (l * l * n * n + 4.0).sqrt()
}

/// Which trace bound applies to the translate family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TranslateCase {
    /// `|a| > 2`
    FarCenter,
    /// `|a| ≤ 2`
    NearCenter,
}

/// Result of testing a constructed translate witness against its bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TranslateCheck {
    pub case: TranslateCase,
    pub trace_modulus: f64,
    /// `None` in the far-center case when no cusp area was supplied.
    pub bound: Option<f64>,
    pub satisfied: Option<bool>,
}

/// Compares the chosen witness's trace modulus with the bound of its case.
///
/// The far-center bound presumes `a/c` sits in a favourable corner of the
/// cusp's Dirichlet cell; for other positions the constructed witness may
/// exceed it, and this reports that rather than hiding it.
pub fn check_translate_witness(
    params: &WitnessParams,
    pair: &TranslatePair,
    vc: Option<f64>,
) -> Result<TranslateCheck, WitnessError> {
    let trace_modulus = pair.chosen().trace.norm();
    let (case, bound) = if params.a.norm() > 2.0 {
        let bound = vc
            .map(|v| far_center_bound(params.n, params.l, v))
            .transpose()?;
        (TranslateCase::FarCenter, bound)
    } else {
        (
            TranslateCase::NearCenter,
            Some(near_center_bound(params.n, params.l)?),
        )
    };
    let satisfied = bound.map(|b| trace_modulus <= b * (1.0 + tolerance::ALGEBRA));
    Ok(TranslateCheck {
        case,
        trace_modulus,
        bound,
        satisfied,
    })
}

/// `(β⁻¹)^k γ` with `β⁻¹ = [[1, l], [0, 1]]`, `γ = [[1, 0], [ω, 1]]` and
/// signed `k`, computed by repeated composition.
pub fn signed_product_witness(
    l: f64,
    omega: Complex64,
    k: i64,
) -> Result<MoebiusMap, WitnessError> {
    let beta_inv = parabolic_translation(l)?;
    let gamma = MoebiusMap::new(
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        omega,
        Complex64::new(1.0, 0.0),
    )?;
    Ok(beta_inv.pow(k).compose(&gamma))
}

/// `(β⁻¹)ⁿγ` for `n ≥ 1`, returned with its raw trace `2 + nlω`.
pub fn product_witness(
    l: f64,
    omega: Complex64,
    n: u32,
) -> Result<(MoebiusMap, Complex64), WitnessError> {
    require_long_translation(l)?;
    require_rank(n)?;
    let map = signed_product_witness(l, omega, i64::from(n))?;
    Ok((map, map.raw_trace()))
}

/// Closed form `[[1 + klω, kl], [ω, 1]]` of [`signed_product_witness`].
pub fn product_witness_closed_form(
    l: f64,
    omega: Complex64,
    k: i64,
) -> Result<MoebiusMap, WitnessError> {
    let kl = k as f64 * l;
    Ok(MoebiusMap::new(
        1.0 + kl * omega,
        Complex64::new(kl, 0.0),
        omega,
        Complex64::new(1.0, 0.0),
    )?)
}

/// The perpendicular witness `[[1 + inl², nl], [il, 1]]` and its trace
/// modulus `√(n²l⁴ + 4)`.
pub fn perpendicular_witness(l: f64, n: u32) -> Result<(MoebiusMap, f64), WitnessError> {
    let (map, trace) = product_witness(l, Complex64::new(0.0, l), n)?;
    Ok((map, trace.norm()))
}
