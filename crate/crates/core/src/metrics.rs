//! Classical and quantum Fisher quantities for unitary phase encoding ρ_θ = e^{−iHθ} ρ e^{iHθ}.
//!
//! Asymmetry is reported in the variance-matched normalization
//!
//! ```text
//! A(ρ, H) = Σ_{k<l} (λ_k − λ_l)² / (λ_k + λ_l) · |⟨k|H|l⟩|²  =  Tr{ρ L²} / 4
//! ```
//!
//! so that A equals the variance on pure states. [`MetricValue::qfi_standard`] converts to the
//! usual Tr{ρL²} convention, which is the one that bounds the classical Fisher information of
//! a measurement.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantum::matrix::{
    commutator, ensure_hermitian, ensure_same_dim, identity, max_abs_diff, projector,
    trace_product, ComplexMatrix, I,
};
use crate::quantum::state::{evolve_phase, PSD_TOL};
use crate::quantum::{DensityMatrix, Observable, SpectralDecomposition};

/// Eigenvalue sums (or pairs) below this are treated as zero and their terms skipped.
pub const DEGENERACY_TOL: f64 = 1e-12;
/// Outcomes with probability below this contribute nothing to classical Fisher information.
pub const PROBABILITY_FLOOR: f64 = 1e-12;
pub const POVM_COMPLETENESS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// QFI / 4; equals the variance on pure states.
    Asymmetry,
    /// Tr{ρL²}.
    QfiStandard,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricValue {
    pub value: f64,
    pub convention: Convention,
}

impl MetricValue {
    pub fn asymmetry(&self) -> f64 {
        match self.convention {
            Convention::Asymmetry => self.value,
            Convention::QfiStandard => self.value / 4.0,
        }
    }

    pub fn qfi_standard(&self) -> f64 {
        match self.convention {
            Convention::Asymmetry => 4.0 * self.value,
            Convention::QfiStandard => self.value,
        }
    }
}

fn check_dims(rho: &DensityMatrix, h: &Observable) -> Result<()> {
    ensure_same_dim(rho.matrix(), h.matrix())
}

/// V(ρ, H) = Tr{ρH²} − Tr{ρH}².
pub fn variance(rho: &DensityMatrix, h: &Observable) -> Result<f64> {
    check_dims(rho, h)?;
    let hm = h.matrix();
    let mean = rho.expectation(hm)?;
    let second = trace_product(&(rho.matrix() * hm), hm).re;
    Ok(second - mean * mean)
}

/// Pairs (λ_k, λ_l, |⟨k|H|l⟩|²) for k < l, with eigenvalues clamped at zero.
fn eigen_pairs(rho: &DensityMatrix, h: &Observable) -> Result<Vec<(f64, f64, f64)>> {
    check_dims(rho, h)?;
    let spec = rho.spectrum()?;
    let hk = spec.in_eigenbasis(h.matrix());
    // Eigensolver noise on zero eigenvalues is snapped away so roots of λ stay exact.
    let lambda: Vec<f64> = spec
        .eigenvalues
        .iter()
        .map(|&l| if l < DEGENERACY_TOL { 0.0 } else { l })
        .collect();
    let n = lambda.len();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for k in 0..n {
        for l in (k + 1)..n {
            out.push((lambda[k], lambda[l], hk[(k, l)].norm_sqr()));
        }
    }
    Ok(out)
}

/// SLD quantum Fisher information in the asymmetry normalization (see module docs).
pub fn asymmetry_sld(rho: &DensityMatrix, h: &Observable) -> Result<MetricValue> {
    let value = eigen_pairs(rho, h)?
        .into_iter()
        .filter(|&(a, b, _)| a + b >= DEGENERACY_TOL)
        .map(|(a, b, h2)| (a - b).powi(2) / (a + b) * h2)
        .sum();
    Ok(MetricValue {
        value,
        convention: Convention::Asymmetry,
    })
}

/// A Chentsov–Morozova function selecting one monotone metric.
#[derive(Clone)]
pub struct CmFunction {
    name: String,
    f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    f_at_zero: f64,
}

impl fmt::Debug for CmFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CmFunction")
            .field("name", &self.name)
            .field("f_at_zero", &self.f_at_zero)
            .finish()
    }
}

impl CmFunction {
    /// Operator monotonicity is not checked; only the normalization f(1) = 1 is.
    pub fn new(
        name: impl Into<String>,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
        f_at_zero: f64,
    ) -> Result<Self> {
        let name = name.into();
        let at_one = f(1.0);
        if (at_one - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidCmFunction {
                name,
                reason: format!("f(1) = {at_one}, expected 1"),
            });
        }
        Ok(Self {
            name,
            f: Arc::new(f),
            f_at_zero,
        })
    }

    /// f(x) = (1 + x)/2, the SLD (Bures) metric.
    pub fn sld() -> Self {
        Self::new("sld", |x| (1.0 + x) / 2.0, 0.5).expect("f(1) = 1")
    }

    /// f(x) = ((1 + √x)/2)², the Wigner–Yanase metric.
    pub fn wigner_yanase() -> Self {
        Self::new("wigner-yanase", |x| ((1.0 + x.sqrt()) / 2.0).powi(2), 0.25).expect("f(1) = 1")
    }

    pub fn catalog() -> Vec<Self> {
        vec![Self::sld(), Self::wigner_yanase()]
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, x: f64) -> f64 {
        if x == 0.0 {
            self.f_at_zero
        } else {
            (self.f)(x)
        }
    }

    pub fn f_at_zero(&self) -> f64 {
        self.f_at_zero
    }

    /// Largest violation of f(x) = x f(1/x) over `grid`.
    pub fn symmetry_defect(&self, grid: &[f64]) -> f64 {
        grid.iter()
            .map(|&x| (self.eval(x) - x * self.eval(1.0 / x)).abs())
            .fold(0.0, f64::max)
    }

    /// c_f(i, j) = 1 / (j f(i/j)); `None` when j is numerically zero.
    fn weight(&self, i: f64, j: f64) -> Option<Result<f64>> {
        if j < DEGENERACY_TOL {
            return None;
        }
        let ratio = i / j;
        let fv = self.eval(ratio);
        if !fv.is_finite() || fv <= 0.0 {
            return Some(Err(Error::UndefinedWeight {
                function: self.name.clone(),
                ratio,
            }));
        }
        Some(Ok(1.0 / (j * fv)))
    }
}

/// Unitary-path norm ‖∂_θ ρ_θ‖²_f of the monotone metric selected by `f`.
///
/// Each unordered eigenvalue pair contributes c_f/2 · (λ_k − λ_l)² |⟨k|H|l⟩|², with c_f
/// averaged over both orientations (the two agree for symmetric f). With `f = sld` this is
/// [`asymmetry_sld`]; with `f = wigner_yanase` it is twice [`skew_information`].
pub fn monotone_metric_norm(f: &CmFunction, rho: &DensityMatrix, h: &Observable) -> Result<f64> {
    let mut total = 0.0;
    for (a, b, h2) in eigen_pairs(rho, h)? {
        if a < DEGENERACY_TOL && b < DEGENERACY_TOL {
            continue;
        }
        let gap2 = (a - b).powi(2);
        if gap2 == 0.0 || h2 == 0.0 {
            continue;
        }
        let weights: Vec<f64> = [f.weight(a, b), f.weight(b, a)]
            .into_iter()
            .flatten()
            .collect::<Result<_>>()?;
        let c = weights.iter().sum::<f64>() / weights.len() as f64;
        total += c / 2.0 * gap2 * h2;
    }
    Ok(total)
}

/// Wigner–Yanase skew information −½ Tr{[√ρ, H]²}.
///
/// Eigenvalues below [`DEGENERACY_TOL`] are treated as zero: the square root would otherwise
/// amplify eigensolver noise of order 1e-16 into errors of order 1e-8.
pub fn skew_information(rho: &DensityMatrix, h: &Observable) -> Result<f64> {
    check_dims(rho, h)?;
    let sqrt_rho = rho
        .spectrum()?
        .apply(|l| if l < DEGENERACY_TOL { 0.0 } else { l.sqrt() });
    let comm = commutator(&sqrt_rho, h.matrix());
    Ok((-0.5 * trace_product(&comm, &comm).re).max(0.0))
}

/// A set of positive operators summing to the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct Povm {
    elements: Vec<Observable>,
}

impl Povm {
    pub fn new(elements: Vec<ComplexMatrix>) -> Result<Self> {
        let Some(first) = elements.first() else {
            return Err(Error::InvalidPovm("no elements".into()));
        };
        let dim = first.nrows();
        let mut sum = ComplexMatrix::zeros(dim, dim);
        let mut checked = Vec::with_capacity(elements.len());
        for (x, e) in elements.into_iter().enumerate() {
            if e.nrows() != dim || e.ncols() != dim {
                return Err(Error::InvalidPovm(format!(
                    "element {x} is {}x{}, expected {dim}x{dim}",
                    e.nrows(),
                    e.ncols()
                )));
            }
            ensure_hermitian(&e, PSD_TOL)
                .map_err(|err| Error::InvalidPovm(format!("element {x}: {err}")))?;
            let min = SpectralDecomposition::of(&e)?.eigenvalues[0];
            if min < -PSD_TOL {
                return Err(Error::InvalidPovm(format!(
                    "element {x} has negative eigenvalue {min:e}"
                )));
            }
            sum += &e;
            checked.push(Observable::new(e)?);
        }
        let defect = max_abs_diff(&sum, &identity(dim));
        if defect > POVM_COMPLETENESS_TOL {
            return Err(Error::InvalidPovm(format!(
                "elements sum to identity only within {defect:e}"
            )));
        }
        Ok(Self { elements: checked })
    }

    /// Rank-one projectors onto the columns of a unitary.
    pub fn from_basis(basis: &ComplexMatrix) -> Result<Self> {
        let cols: Vec<ComplexMatrix> = basis
            .column_iter()
            .map(|col| projector(&col.iter().copied().collect::<Vec<_>>()))
            .collect();
        Self::new(cols)
    }

    /// Projective measurement in the eigenbasis of `h`.
    pub fn eigenbasis(h: &Observable) -> Result<Self> {
        Self::from_basis(&h.spectrum()?.eigenvectors)
    }

    pub fn elements(&self) -> &[Observable] {
        &self.elements
    }

    pub fn dim(&self) -> usize {
        self.elements[0].dim()
    }
}

/// Classical Fisher information of `povm` on ρ_θ, with the derivative taken analytically as
/// ∂_θ ρ_θ = −i[H, ρ_θ].
pub fn classical_fisher_povm(
    rho: &DensityMatrix,
    h: &Observable,
    theta: f64,
    povm: &Povm,
) -> Result<f64> {
    check_dims(rho, h)?;
    if povm.dim() != rho.dim() {
        return Err(Error::DimensionMismatch(rho.dim(), povm.dim()));
    }
    let rho_t = evolve_phase(rho, h, theta)?;
    let d_rho = commutator(h.matrix(), rho_t.matrix()) * (-I);
    let mut fisher = 0.0;
    for e in povm.elements() {
        let p = trace_product(rho_t.matrix(), e.matrix()).re;
        if p < PROBABILITY_FLOOR {
            continue;
        }
        let dp = trace_product(&d_rho, e.matrix()).re;
        fisher += dp * dp / p;
    }
    Ok(fisher)
}

/// Variance floor 1/(n F) for `n_repetitions` independent runs.
pub fn cramer_rao(fisher: f64, n_repetitions: u64) -> Result<f64> {
    if n_repetitions == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "n_repetitions",
            value: 0.0,
        });
    }
    if fisher.is_nan() || fisher <= 1e-15 {
        return Err(Error::ZeroInformation(fisher));
    }
    Ok(1.0 / (n_repetitions as f64 * fisher))
}
