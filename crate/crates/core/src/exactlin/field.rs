use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// Scalar field used by the linear algebra kernel.
pub trait Field:
    Num + Clone + Eq + Hash + Debug + Display + std::ops::Neg<Output = Self> + Send + Sync + 'static
{
    fn from_int(x: i64) -> Self;
}

impl<I> Field for Ratio<I>
where
    I: Integer + Signed + Clone + Hash + Debug + Display + Send + Sync + 'static,
    Ratio<I>: FromPrimitive,
{
    fn from_int(x: i64) -> Self {
        <Ratio<I> as FromPrimitive>::from_i64(x).expect("integer fits the scalar type")
    }
}
