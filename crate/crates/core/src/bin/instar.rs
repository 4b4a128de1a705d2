use std::io::Write;

fn main() {
    let (code, out) = instar::cli::run(std::env::args_os());
    let stream = if code == 0 {
        &mut std::io::stdout() as &mut dyn Write
    } else {
        &mut std::io::stderr()
    };
    let _ = stream.write_all(out.as_bytes());
    std::process::exit(code);
}
