//! Division, Buchberger's algorithm, elimination, saturation and radical
//! membership.

mod buchberger;
mod division;
mod ideal;
mod io;

pub use buchberger::{
    buchberger, s_polynomial, satisfies_buchberger_criterion, GroebnerBasis, GroebnerOptions,
    DEFAULT_STEP_LIMIT, STEP_LIMIT_ENV,
};
pub use division::{divide, reduce};
pub use ideal::{eliminate, ideals_equal, radical_member, saturate_ideal, IdealPresentation};
pub use io::{order_from_json, order_to_json, AnyIdeal, FieldDescriptor, IdealFile};
