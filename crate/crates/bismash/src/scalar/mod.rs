//! Exact field arithmetic behind a single [`Scalar`] trait.
//!
//! Three fields are provided: the rationals ([`Rat`]), prime fields
//! ([`Gf`]) and small extension fields of the rationals ([`ExtElem`]).
//! Values carry their field at runtime where the field needs parameters;
//! the additive/multiplicative identities produced by `Zero::zero` and
//! `One::one` are "unattached" sentinels that combine with any value of the
//! same scalar type, so that generic code (matrix sums, products) works
//! without threading a field descriptor everywhere.

use num_traits::{One, Zero};
use rand::RngCore;
use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

mod ext;
mod gf;
pub mod poly;
mod rat;
pub(crate) mod roots;

pub use ext::{ExtElem, ExtField};
pub use gf::{Gf, GfField};
pub use rat::Rat;

/// The field of rational numbers; carries no parameters.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct QField;

/// An element of an exact field.
///
/// Equality is exact and total on attached values; unattached sentinels
/// compare by their integer meaning. `inv` returns `None` exactly on zero.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
    + 'static
{
    /// Runtime descriptor of the field an element belongs to.
    type Field: Clone + PartialEq + Debug;

    /// The field this element is attached to, if any.
    fn field(&self) -> Option<Self::Field>;

    /// The image of `num/den` in the field; `None` when `den` maps to zero.
    fn from_ratio(num: i64, den: i64, field: &Self::Field) -> Option<Self>;

    /// The image of the integer `n` in the field.
    fn int(n: i64, field: &Self::Field) -> Self {
        Self::from_ratio(n, 1, field).expect("denominator 1 never vanishes")
    }

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// The characteristic of the field (0 for characteristic zero).
    fn characteristic(field: &Self::Field) -> u64;

    /// All roots in the field of the polynomial with the given coefficients
    /// (ascending order, `coeffs[i]` the coefficient of `x^i`), without
    /// multiplicity, in a deterministic order.
    fn poly_roots(field: &Self::Field, coeffs: &[Self]) -> Vec<Self>;

    /// A random field element of modest height, for randomized law checks.
    fn sample(field: &Self::Field, rng: &mut dyn RngCore) -> Self;

    /// Fraction-free elimination hook: a representation as an exact integer
    /// ratio, when the field embeds the integers compatibly with it.
    fn to_int_ratio(&self) -> Option<(num_bigint::BigInt, num_bigint::BigInt)> {
        None
    }

    /// Inverse hook of [`Scalar::to_int_ratio`].
    fn from_int_ratio(_num: num_bigint::BigInt, _den: num_bigint::BigInt) -> Option<Self> {
        None
    }
}

/// First attached field among the given elements, or `None` when every
/// element is an unattached sentinel.
pub fn field_of<K: Scalar>(items: &[K]) -> Option<K::Field> {
    items.iter().find_map(|x| x.field())
}

/// Checks that all attached elements agree on their field and returns it.
pub fn common_field<K: Scalar>(items: &[K]) -> Result<Option<K::Field>, crate::MathError> {
    let mut found: Option<K::Field> = None;
    for x in items {
        if let Some(f) = x.field() {
            match &found {
                None => found = Some(f),
                Some(g) if *g == f => {}
                Some(_) => return Err(crate::MathError::FieldMismatch),
            }
        }
    }
    Ok(found)
}

/// Checks that already-resolved field descriptors agree.
pub fn fields_agree<K: Scalar>(fields: &[Option<K::Field>]) -> Result<(), crate::MathError> {
    let mut found: Option<&K::Field> = None;
    for f in fields.iter().flatten() {
        match found {
            None => found = Some(f),
            Some(g) if g == f => {}
            Some(_) => return Err(crate::MathError::FieldMismatch),
        }
    }
    Ok(())
}
