fn main() {
    std::process::exit(oam_qudit::cli::run(std::env::args_os()));
}
