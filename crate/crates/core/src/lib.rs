//! Flagged refined dual stable Grothendieck polynomials, computed two
//! independent ways: by enumerating reverse plane partitions and by
//! Jacobi-Trudi style determinants with plethystic entries. Everything is
//! exact arithmetic over arbitrary-precision integers, so the two sides can
//! be compared for literal equality.

pub mod alphabets;
pub mod jacobi_trudi;
pub mod polyring;
pub mod rpp_enum;
pub mod shapes;
