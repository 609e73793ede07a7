fn main() {
    std::process::exit(covertower::cli::main())
}
