fn main() {
    std::process::exit(treelap_cli::run(std::env::args_os()));
}
