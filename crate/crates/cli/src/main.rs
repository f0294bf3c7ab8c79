fn main() {
    env_logger::init();
    let (code, out) = irrep_cli::run(std::env::args_os());
    println!("{}", out.trim_end());
    std::process::exit(code);
}
