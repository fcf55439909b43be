fn main() {
    std::process::exit(hbmcg::cli::run());
}
