fn main() {
    std::process::exit(subdepth::cli::run(std::env::args_os()));
}
