//! Green's relations and the inverse-monoid structure of the enumerated monoid.

use instar::engine::green::{factorizable_part, idempotents, units};
use instar::engine::{enumerate_instar, is_inverse_monoid, Green};

fn main() -> instar::Result<()> {
    let m = enumerate_instar(4)?;
    let green = Green::new(&m);
    let els = m.elements().unwrap();

    let mut r_classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..m.len() {
        if !r_classes.iter().any(|c| c.contains(&a)) {
            r_classes.push(green.r_class(a));
        }
    }
    println!("elements {}", m.len());
    println!("R-classes {}", r_classes.len());
    println!("idempotents {}", idempotents(&m).len());
    println!("units {}", units(&m).len());
    println!("factorizable part {}", factorizable_part(&m).len());
    println!("inverse monoid {}", is_inverse_monoid(&m));

    let x = m.index_of(&instar::BlockBijection::gen_x(4)?).unwrap();
    println!("H-class of x:");
    for h in green.h_class(x) {
        println!("  {}", els[h]);
    }
    Ok(())
}
