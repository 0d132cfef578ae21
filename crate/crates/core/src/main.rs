fn main() {
    let out = nanoword::cli::run(std::env::args_os());
    if out.code == 1 {
        eprint!("{}", out.stdout);
    } else {
        print!("{}", out.stdout);
    }
    std::process::exit(out.code);
}
