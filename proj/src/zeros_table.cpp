#include "ntlab/zeros_table.hpp"
#include "ntlab/zeta.hpp"

#include <fstream>
#include <stdexcept>

namespace ntlab {

namespace {

// First 20 ordinates, 30 decimal digits.
const char* kZeros[] = {
    "14.134725141734693790457251983562",
    "21.022039638771554992628479593897",
    "25.010857580145688763213790992563",
    "30.424876125859513210311897530584",
    "32.935061587739189690662368964074",
    "37.586178158825671257217763480705",
    "40.918719012147495187398126914633",
    "43.327073280914999519496122165406",
    "48.005150881167159727942472749427",
    "49.773832477672302181916784678564",
    "52.970321477714460644147296608880",
    "56.446247697063394804367759476706",
    "59.347044002602353079653648674992",
    "60.831778524609809844259901824524",
    "65.112544048081606660875054253183",
    "67.079810529494173714478828896522",
    "69.546401711173979252926857526554",
    "72.067157674481907582522107969826",
    "75.704690699083933168326916762030",
    "77.144840068874805372682664856304",
};

}  // namespace

int bundled_zero_count() { return static_cast<int>(std::size(kZeros)); }

std::vector<HPReal> riemann_zero_ordinates(int count, int digits, const std::string& path) {
    std::vector<std::string> raw;
    if (path.empty()) {
        for (const char* z : kZeros) raw.emplace_back(z);
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open zero table: " + path);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line[0] != '#') raw.push_back(line);
        }
    }
    if (count > static_cast<int>(raw.size()))
        throw std::out_of_range("zero table holds only " + std::to_string(raw.size()) +
                                " ordinates");
    const mpfr_prec_t wp = prec_bits(std::max(digits, 40));
    const int check_digits = 40;
    HPReal tol("1e-10", wp);
    std::vector<HPReal> out;
    for (int i = 0; i < count; ++i) {
        HPReal t(raw[i], wp);
        HPComplex s(HPReal(0.5, wp), t);
        HPReal mag = riemann_zeta(s, check_digits).abs();
        if (!(mag < tol))
            throw std::runtime_error("zero table verification failed at ordinate " +
                                     std::to_string(i + 1) + ": |zeta(1/2+it)| = " + mag.str(6));
        out.push_back(t);
    }
    return out;
}

}  // namespace ntlab
