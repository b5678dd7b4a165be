//! Mutation classes of type A and D up to isomorphism.

use dncat::quiver::{check_bv_facts, MutationClass};

fn main() -> dncat::error::Result<()> {
    for k in 1..=7 {
        let a = MutationClass::a(k)?;
        assert!(a.members().all(|q| check_bv_facts(q).is_none()));
        println!("A_{k}: {} quivers", a.len());
    }
    for k in 4..=8 {
        println!("D_{k}: {} quivers", MutationClass::d(k)?.len());
    }
    Ok(())
}
