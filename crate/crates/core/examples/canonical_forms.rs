//! Isomorphism classes through canonical forms.

use core_index::canon::{canonical_form, is_isomorphic};
use core_index::families::FamilySpec;

fn main() -> core_index::error::Result<()> {
    let a = FamilySpec::Pineapple { n: 6, g: 3 }.build()?;
    let b = a.permute(&[5, 4, 3, 2, 1, 0]);
    println!("relabeled copy isomorphic: {}", is_isomorphic(&a, &b));
    println!("canonical forms equal: {}", canonical_form(&a)? == canonical_form(&b)?);
    let c = FamilySpec::Lollipop { n: 6, g: 3 }.build()?;
    println!("pineapple vs lollipop isomorphic: {}", is_isomorphic(&a, &c));
    println!("canonical graph6 of the lollipop: {}", canonical_form(&c)?.as_str());
    Ok(())
}
