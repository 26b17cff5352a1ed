// A short walk through the library: exact sums, their trig series, the
// q-zeta decomposition and a Mellin round trip.

#include "hbq/hbq.hpp"

#include <cstdio>

using namespace hbq;

int main()
{
    for (auto v : {SumVariant::S, SumVariant::s3, SumVariant::s4}) {
        const SumArgs args{v, 1, 3};
        if (!parity_condition(v, 1, 3).holds) {
            continue;
        }
        std::printf("%s(1,3) = %s, trig series %.15f\n", std::string(to_string(v)).c_str(),
                    to_string(hardy_berndt(args)).c_str(), classical_trig_series(v, 1, 3));
    }
    std::printf("s(5,12) = %s\n", to_string(dedekind_sum(5, 12)).c_str());

    const auto q = QParam::parse("1/2");
    const auto im = im_q(2.0, q, 1e-14);
    std::printf("Im_q(2) at q=1/2: %.17g (tail <= %.1e, %lld terms)\n", im.value.real(), im.tail_bound,
                static_cast<long long>(im.terms_used));

    const auto chi = parse_character("5:1");
    const auto t5 = verify_theorem5(2.0, chi, q, 1e-10);
    std::printf("decomposition with chi %s: |diff| = %.2e\n", chi.label().c_str(), t5.abs_diff);

    const auto quad = mellin_transform(MellinIntegrand::F(), 2.0, q, QuadratureConfig{});
    std::printf("Mellin of F at s=2: %.17g (error <= %.1e)\n", quad.value.real(), quad.tail_bound);

    const auto abel = q_hardy_berndt(SumVariant::S, 1, 4, QParam::one(), RegularizationSchedule{}, 1e-8);
    std::printf("Abel value of the q = 1 series for S(1,4): %.12f, finite sum %s\n", abel.value.real(),
                to_string(hardy_berndt({SumVariant::S, 1, 4})).c_str());
}
