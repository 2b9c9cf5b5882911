fn main() -> std::process::ExitCode {
    peglab::service::cli::main()
}
