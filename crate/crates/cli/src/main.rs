fn main() {
    std::process::exit(mixvol_cli::main_with(std::env::args_os()));
}
