fn main() {
    std::process::exit(ml_renewal::cli::main_entry());
}
