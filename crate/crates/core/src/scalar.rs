//! Scalar bounds shared by the generic algorithms.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{Num, Signed};

/// A commutative ring with unity in which polynomial formulas can be
/// evaluated: machine integers, big integers, rationals or floats.
pub trait RingScalar: Num + Clone + Debug {}

impl<T> RingScalar for T where T: Num + Clone + Debug {}

/// A signed Euclidean domain of integers. Smith normal form, fraction-free
/// elimination and Laplacians are generic over this.
pub trait IntegerScalar: Integer + Signed + Clone + Debug + Display {}

impl<T> IntegerScalar for T where T: Integer + Signed + Clone + Debug + Display {}
