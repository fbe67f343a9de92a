class Broken { void f() { int � = 1; } }
