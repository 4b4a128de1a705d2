//! Words over the generators and their images, including the named words
//! and the two letter substitutions.

use instar::words::{e_i_word, l_word, psi_subst, sigma_word, theta_subst, y_word};
use instar::{phi_eval, Word};

fn main() -> instar::Result<()> {
    let n = 5;
    for text in [
        "x", "x x x", "x s2 x", "s1 s2 s1", "sigma", "l3", "y4", "e3", "1",
    ] {
        let w: Word = text.parse()?;
        println!("{text:>10} -> {}", phi_eval(&w, n)?);
    }
    println!("sigma = {}", sigma_word());
    println!("l_3   = {}", l_word(3)?);
    println!("y_4   = {}", y_word(4)?);
    println!("e_3   = {}", e_i_word(3)?);

    let w: Word = "t s1 t".parse()?;
    println!("theta({w}) = {}", theta_subst(&w));
    let v: Word = "x s1 s2".parse()?;
    let lifted = psi_subst(&v, n)?;
    println!("psi({v}) = {lifted}");
    let img = phi_eval(&lifted, n)?;
    println!("  image {img}, collapsed {}", img.upsilon()?);
    println!("  direct image at n-1: {}", phi_eval(&v, n - 1)?);
    Ok(())
}
