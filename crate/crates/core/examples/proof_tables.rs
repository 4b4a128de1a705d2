//! Run every verification suite at one degree (default 5) and print the reports.

use instar::engine::verify;
use instar::engine::DEFAULT_CLASS_CAP;

fn main() -> instar::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    let mut reports = vec![
        verify::verify_relations(n)?,
        verify::check_presentation(n, DEFAULT_CLASS_CAP)?,
        verify::verify_table2(n)?,
        verify::verify_local_iso(n)?,
    ];
    if n >= 5 {
        reports.insert(2, verify::verify_table1(n)?);
    }
    for r in &reports {
        print!("{r}");
    }
    let failed: usize = reports.iter().map(|r| r.failures().len()).sum();
    println!("{failed} failures");
    Ok(())
}
