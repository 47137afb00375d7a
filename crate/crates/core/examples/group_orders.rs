//! Closed-form orders checked against Schreier–Sims on a few natural actions.
use gfact::grpgen::{classical_group_verified, GroupSpec};
use gfact::orderarith::{group_order, Family, Variant};

fn main() -> gfact::Result<()> {
    for (fam, n, q) in [(Family::SL, 3, 4), (Family::Sp, 6, 2), (Family::SU, 4, 2), (Family::OmegaMinus, 8, 2)] {
        let simple = group_order(fam, n, q, Variant::Simple)?;
        let linear = group_order(fam, n, q, Variant::Linear)?;
        println!("{fam}({n},{q}): simple {simple}, matrix group {linear}");
    }
    for spec in ["SL:3:3", "Sp:4:3", "SU:3:3", "OmegaPlus:6:2"] {
        let spec: GroupSpec = spec.parse()?;
        let (_, check) = classical_group_verified(&spec, 1)?;
        match check {
            Some(c) => println!("{spec}: {c:?}"),
            None => println!("{spec}: no permutation check at this size"),
        }
    }
    Ok(())
}
