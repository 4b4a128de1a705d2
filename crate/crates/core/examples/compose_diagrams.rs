//! Parse two block bijections, multiply them, and draw the result.

use instar::BlockBijection;

fn main() -> instar::Result<()> {
    let a = BlockBijection::parse(4, "1,2;3|3;1,2|4;4")?;
    let b = BlockBijection::gen_s(4, 3)?;
    let ab = a.compose(&b)?;
    println!("a     = {a}");
    println!("b     = {b}");
    println!("a*b   = {ab}");
    println!("a^-1  = {}", a.inverse());
    println!("dom a = {}   ran a = {}", a.domain(), a.range());
    println!(
        "uniform: a {}  a*a^-1 {}",
        a.is_uniform(),
        a.compose(&a.inverse())?.is_uniform()
    );
    println!();
    println!("{}", ab.render_ascii());
    println!("{}", ab.render_dot());
    Ok(())
}
