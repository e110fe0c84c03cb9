fn main() {
    std::process::exit(biased_pred::cli::run(std::env::args_os()));
}
