pub mod asymptotic;
pub mod bernoulli;
pub mod config;
pub mod error;
pub mod gauss;
pub mod golden;
pub mod hurwitz;
pub mod identities;
pub mod quadrature;
pub mod report;
pub mod series;
pub mod summation;

pub use config::EvaluationConfig;
pub use error::{Result, ZetaError};
pub use hurwitz::{
    hurwitz_du, hurwitz_zeta, hurwitz_zeta_bounded, riemann_zeta, step_hurwitz, HurwitzValue,
    ZetaArgument,
};
pub use identities::{
    verify_theorem1, verify_theorem2, zeta2_integral, zeta2_smooth_approx, zeta3_decomposition,
    zeta3_integral, Check, Suite,
};
pub use quadrature::{integrate_product, IntegrandFactor, QuadratureResult};
pub use report::VerificationReport;
pub use series::{reflection_check, tornheim_series, zeta2_series, zeta3_series};
