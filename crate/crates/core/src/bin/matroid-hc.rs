fn main() {
    std::process::exit(matroid_hc::cli::run(std::env::args_os()));
}
