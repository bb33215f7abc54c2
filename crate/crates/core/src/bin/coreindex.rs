fn main() -> std::process::ExitCode {
    core_index::cli::main()
}
