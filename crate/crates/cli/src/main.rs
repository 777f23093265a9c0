fn main() {
    let plan = match lorentz_optics_cli::parse(std::env::args_os().skip(1)) {
        Ok(plan) => plan,
        Err(e) => e.exit(),
    };
    std::process::exit(lorentz_optics_cli::execute(&plan));
}
