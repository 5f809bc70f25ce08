//! Exact-arithmetic invariants of modules over the twisted commutative
//! algebra `A = Sym(C^d ⊗ C^∞)`.
//!
//! The algebra `A` is the polynomial ring in a `d × ∞` matrix of variables
//! together with its `GL_∞`-action; its modules decompose into Schur functors
//! `S_α(E) ⊗ S_β(V)` with `E = C^d` and `V = C^∞`. Everything here is exact
//! integer combinatorics on that decomposition:
//!
//! - [`partitions`]: partitions, integer weights, canonical ordering;
//! - [`schur`]: the ring Λ of symmetric functions in the Schur basis,
//!   Littlewood–Richardson products, the star involution;
//! - [`bott`]: Bott's algorithm and Borel–Weil–Bott pushforwards on finite
//!   and infinite Grassmannians;
//! - [`characters`]: equivariant characters of `A`, the generator modules
//!   `K_{r,λ}`, and the torsion injectives `J_λ`;
//! - [`localcoh`]: derived saturation of the generic simple modules in
//!   closed form;
//! - [`resolutions`]: equivariant Betti tables, linear strands, and
//!   regularity of row-truncated free modules;
//! - [`ktheory`]: the Grothendieck group `K(A) ≅ ⊕_r Λ ⊗ K(Gr_r(C^d))`,
//!   dual bases, and the Fourier-transform involution;
//! - [`spectrum`]: Krull-dimension combinatorics of the total Grassmannian.
//!
//! Heavy enumerations (saturation, Betti tables) are data-parallel via
//! rayon when the `parallel` feature is enabled (the default); see
//! [`exec::Strategy`].

pub mod bott;
pub mod characters;
pub mod exec;
pub mod ktheory;
pub mod localcoh;
pub mod partitions;
pub mod resolutions;
pub mod schur;
pub mod spectrum;

/// Exact integer type used for all multiplicities and coefficients.
pub type Int = num_bigint::BigInt;

/// Errors surfaced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed partition or weight literal; the message names the token.
    #[error("invalid literal: {0}")]
    InvalidLiteral(String),
    /// A precondition on the arguments of an operation failed.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// An internal invariant was violated; indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Renders an exact integer as a JSON number (arbitrary precision).
pub(crate) fn int_to_json(n: &Int) -> serde_json::Value {
    let number: serde_json::Number = serde_json::from_str(&n.to_string())
        .expect("integer decimal literal is a valid JSON number");
    serde_json::Value::Number(number)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_integers_are_not_clamped() {
        let huge = Int::from(1u64) << 100;
        let v = int_to_json(&-&huge);
        assert_eq!(v.to_string(), format!("-{}", huge));
    }
}
