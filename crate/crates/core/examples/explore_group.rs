//! Explore all prime-order cyclic pairs of a named group.
//! Usage: explore_group [name]  (default Sym:6; try M11, Alt:7, PSL2(13))
use gfact::normfact::{explore_all_pairs, Caps};
use gfact::table1::named_group;

fn main() -> gfact::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "Sym:6".into());
    let g = named_group(&name, 1)?;
    let ex = explore_all_pairs(&g, true, Caps::default(), 1)?;
    println!("{name}: order {}, {} cyclic classes", ex.order, ex.classes.len());
    for c in &ex.classes {
        println!("  class {} order {} cycles {}", c.class_id, c.order, c.cycles);
    }
    for p in ex.pairs.iter().chain(&ex.composite_pairs) {
        println!("  G = N(<x>)N(<y>) with x ~ {} and y ~ {}", p.x_cycles, p.y_cycles);
    }
    Ok(())
}
