fn main() {
    std::process::exit(chordbraid_cli::run());
}
