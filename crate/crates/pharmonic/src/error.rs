use thiserror::Error;

/// Errors reported by the solvers in this crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An input was outside its admissible range.
    #[error("domain error: {0}")]
    Domain(String),

    /// The branch constant c(γ) is nonpositive, so no one-signed profile exists.
    #[error("no eigenfunction: branch constant c = {c:.6e} <= 0 at gamma = {gamma:.6e}")]
    NoEigenfunction { gamma: f64, c: f64 },

    /// Adaptive quadrature exceeded its subdivision budget.
    #[error("quadrature failed to converge within {max_subdiv} subdivisions (interval [{a:.6e}, {b:.6e}])")]
    QuadratureFailed { a: f64, b: f64, max_subdiv: u32 },

    /// A bracketing scan found no sign change; the scan table is attached.
    #[error("bracketing failed: {context}; scan = {scan:?}")]
    Bracketing {
        context: String,
        scan: Vec<(f64, f64)>,
    },

    /// The quasilinear weight degenerated along a shot.
    #[error("degenerate weight {weight:.3e} reached at theta = {theta:.8}")]
    DegenerateWeight { theta: f64, weight: f64 },

    /// The ODE integrator could not proceed (step-size underflow).
    #[error("step size underflow at theta = {theta:.8}")]
    StepUnderflow { theta: f64 },

    /// The first-zero map failed its monotonicity assertion during bisection.
    #[error("monotonicity violated: {context}; scan = {scan:?}")]
    Monotonicity {
        context: String,
        scan: Vec<(f64, f64)>,
    },

    /// Damped Newton for the penalized problem did not converge.
    #[error("newton did not converge at eps = {eps:.3e}: residual {residual:.3e} after {iterations} iterations")]
    NewtonDiverged {
        eps: f64,
        residual: f64,
        iterations: usize,
    },

    /// The sequence eps * v_eps failed its Cauchy/convergence check.
    #[error("ergodic limit not converged: {context}; sequence = {sequence:?}")]
    ErgodicNotConverged {
        context: String,
        sequence: Vec<(f64, f64)>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
