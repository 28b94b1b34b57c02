fn main() {
    std::process::exit(su3_cli::run(std::env::args_os()));
}
