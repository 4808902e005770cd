fn main() {
    std::process::exit(hopfcert::cli::main_entry());
}
