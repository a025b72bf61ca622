//! Thin binary wrapper: all behaviour lives in the library's [`powmap::cli`].

fn main() -> std::process::ExitCode {
    powmap::cli::run()
}
