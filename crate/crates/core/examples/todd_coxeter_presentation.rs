//! Enumerate the monoid defined by generators and relations and check it
//! against the concrete diagram monoid.

use std::time::Instant;

use instar::engine::{check_presentation, todd_coxeter, DEFAULT_CLASS_CAP};
use instar::words::{relations_moore, relations_r};

fn main() -> instar::Result<()> {
    let pres = relations_r(4)?;
    for r in &pres.relations {
        println!("{r}");
    }
    for n in 3..=5 {
        let t = Instant::now();
        let table = todd_coxeter(&relations_r(n)?, DEFAULT_CLASS_CAP)?;
        let sym = todd_coxeter(&relations_moore(n)?, DEFAULT_CLASS_CAP)?;
        println!(
            "n={n}: {} classes ({} cosets defined), symmetric group {} [{:?}]",
            table.size(),
            table.defined,
            sym.size(),
            t.elapsed()
        );
    }
    print!("{}", check_presentation(4, DEFAULT_CLASS_CAP)?);
    Ok(())
}
