// Command-line front end: single-point queries and figure-data sweeps.
//
// Usage:
//   enttransfer beta-c --dbeta 0.01
//   enttransfer region --beta 1/5 --pi-fraction --dbeta 0.01
//   enttransfer sweep --preset fig4 --grid-points 500 -o fig4.csv
//   enttransfer feasible --config point.cfg --alpha 0.3

#include "enttransfer/cli.hpp"

int main(int argc, char** argv)
{
    return enttransfer::cli::main_entry(argc, argv);
}
