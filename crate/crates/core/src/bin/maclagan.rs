fn main() { std::process::exit(maclagan::cli::main()); }
