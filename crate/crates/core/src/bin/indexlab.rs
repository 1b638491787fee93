fn main() -> std::process::ExitCode {
    indexlab::cli::main()
}
