fn main() {
    // placeholder while the library modules are built out
}
