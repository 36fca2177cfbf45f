//! Exact resultants and discriminants of binary forms, the elementary
//! homogeneous symmetric polynomials, and finite-field checks of the
//! symmetric-product quotients.
//!
//! Coefficient rings implement [`Ring`]; [`Rationals`], [`Integers`] and
//! [`PrimeField`] are provided, and [`PolyRing`] lets the same algorithms
//! run on polynomial entries.

pub mod error;
pub mod identities;
pub mod linalg;
pub mod parser;
pub mod poly;
pub mod resultant;
pub mod ring;
pub mod scan;
pub mod symprod;

pub use error::{Error, Result};
pub use linalg::{bareiss_det, cofactor_det, Matrix, Solution};
pub use parser::{format_poly, parse_poly, ParseError};
pub use poly::{Degree, Homogeneity, Monomial, Poly, PolyRing, VarTable};
pub use resultant::{
    discriminant, discriminant_symbolic, gcd_binary_forms, res_product_form, resultant, resultant_symbolic,
    sylvester_matrix, BinaryForm, RootData,
};
pub use ring::{Integers, PrimeField, ProjectiveRing, Rationals, Ring};
pub use scan::{enumerate_p1, scan_disc_quotient, scan_quotient, scan_resultant_equiv, ScanReport};
pub use symprod::{
    check_independence, ehsp, express_in_ehsp, form_of_tuple, is_symmetric, member_dn, member_rnm, member_xn,
    member_xnm, viete, Permutation, PointTuple, ProjPoint,
};
