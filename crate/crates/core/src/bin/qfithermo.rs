fn main() {
    std::process::exit(qfithermo::cli::run(std::env::args_os()));
}
