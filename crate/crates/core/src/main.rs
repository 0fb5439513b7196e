use clap::Parser;

fn main() {
    let out = qconvex::cli::run(&qconvex::cli::Cli::parse());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
