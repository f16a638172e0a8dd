//! Data shared by the unit tests.

use crate::abelian::{datum_search, AbelianGroup, CartanType, LiftingSpec, YDDatum};
use crate::exactnum::Cyclotomic;

pub fn c(n: i64) -> Cyclotomic {
    Cyclotomic::from_int(n)
}

pub fn zeta(n: u32) -> Cyclotomic {
    Cyclotomic::zeta(n).unwrap()
}

pub fn b2_z33() -> YDDatum {
    let g = AbelianGroup::new(alloc::vec![3, 3]).unwrap();
    YDDatum::new(&g, &[1, 0], &[0, 1], &[2, 0], &[1, 1]).unwrap()
}

/// First B2 datum over Z9 x Z9 with n = 3 admitting all four parameters.
pub fn b2_z99() -> YDDatum {
    let g = AbelianGroup::new(alloc::vec![9, 9]).unwrap();
    datum_search(&g, CartanType::B2, 3)
        .into_iter()
        .find(|d| LiftingSpec::b2(d, 1, 1, c(1), c(1)).admissible().is_ok())
        .expect("a B2 datum over Z9 x Z9")
}

pub fn b2_n7() -> YDDatum {
    let g = AbelianGroup::new(alloc::vec![7, 7]).unwrap();
    datum_search(&g, CartanType::B2, 7).into_iter().next().expect("a B2 datum over Z7 x Z7")
}

pub fn a2_z33() -> YDDatum {
    let g = AbelianGroup::new(alloc::vec![3, 3]).unwrap();
    YDDatum::new(&g, &[1, 0], &[0, 1], &[1, 1], &[1, 1]).unwrap()
}

pub fn a2_z49() -> YDDatum {
    let g = AbelianGroup::cyclic(49).unwrap();
    YDDatum::new(&g, &[1], &[4], &[7], &[14]).unwrap()
}
