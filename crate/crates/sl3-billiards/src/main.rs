fn main() {
    std::process::exit(sl3_billiards::cli::run(std::env::args_os()));
}
