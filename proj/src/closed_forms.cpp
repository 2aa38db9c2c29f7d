/**
 * @file closed_forms.cpp
 */

#include "nilwave/closed_forms.hpp"

#include <vector>

namespace nilwave {

namespace {

// Appends from, from-step, ... down to `to` (inclusive), each `copies` times.
// Values below 1 are never emitted.
void run(std::vector<int>& out, int from, int to, int step, int copies) {
    for (int v = from; v >= to && v >= 1; v -= step) {
        for (int c = 0; c < copies; ++c) out.push_back(v);
    }
}

// (head^k, (head-1)^4, ..., 1^4)
Partition quad_block(int head, int k) {
    std::vector<int> out;
    if (head >= 1) {
        for (int c = 0; c < k; ++c) out.push_back(head);
        run(out, head - 1, 1, 1, 4);
    }
    return Partition(std::move(out));
}

Partition from_runs(std::vector<int> parts) { return Partition::from_unsorted(std::move(parts)); }

}  // namespace

ClosedForm lambda_t_closed_form(const FamilyParams& p, int n) {
    const int a = p.a;
    const int b = p.b;
    std::vector<int> out;
    ClosedForm cf;
    switch (p.which) {
        case SupportCase::Pgl:
            run(out, 1, 1, 1, n);
            cf.display = "(1^n)";
            break;
        case SupportCase::SoOdd:
            if (b >= a) {
                run(out, 2 * b, 2 * a, 2, 2);
                run(out, 2 * a - 1, 1, 1, 2);
                cf.display = "(2b,2b,...,2a,2a,2a-1,2a-1,...,1,1)";
            } else {
                run(out, 2 * a - 1, 2 * b + 1, 2, 2);
                run(out, 2 * b, 1, 1, 2);
                cf.display = "(2a-1,2a-1,...,2b+1,2b+1,2b,2b,...,1,1)";
            }
            break;
        case SupportCase::PspSplit:
            out.push_back(2 * a + 1);
            run(out, 2 * a - 1, 2 * b + 1, 2, 2);
            run(out, 2 * b, 1, 1, 2);
            cf.display = "(2a+1,2a-1,2a-1,...,2b+1,2b+1,2b,2b,...,1,1)";
            break;
        case SupportCase::PspTwisted:
            if (p.b_branch()) {
                out.push_back(2 * b + 1);
                run(out, 2 * b, a + 1, 1, 2);
                run(out, a, 1, 1, 4);
                cf.display = "(2b+1,(2b)^2,...,(a+1)^2,a^4,...,1^4)";
            } else if (a % 2 == 0) {
                out.push_back(a + 1);
                run(out, a - 1, 2 * b + 1, 2, 4);
                run(out, 2 * b, 1, 1, 4);
                cf.display = "(a+1,(a-1)^4,...,(2b+1)^4,(2b)^4,...,1^4)";
            } else {
                run(out, a, a, 1, 3);
                run(out, a - 2, 2 * b + 1, 2, 4);
                run(out, 2 * b, 1, 1, 4);
                cf.display = "(a^3,(a-2)^4,...,(2b+1)^4,(2b)^4,...,1^4)";
            }
            break;
        case SupportCase::PsoSplit:
            out.push_back(2 * a);
            run(out, 2 * a - 2, 2 * b, 2, 2);
            run(out, 2 * b - 1, 1, 1, 2);
            cf.display = "(2a,2a-2,2a-2,...,2b,2b,2b-1,2b-1,...,1,1)";
            break;
        case SupportCase::PsoRho: {
            // The explicit display for this case repeats the symplectic one, whose
            // total is 2n+4b+1, so the pointwise-sum display is used instead, with
            // its rows matched to the branches of lambda in order.
            const int s = p.sigma();
            const int d = p.delta();
            cf.known_inconsistent = a % 2 == 1;
            cf.inconsistency_note =
                "the odd-a rows of the pointwise-sum display for lambda^t in the PSO rho/etarho "
                "case do not transpose the odd-a branches of lambda and have the wrong total";
            if (a % 2 == 0) {
                const Partition left = quad_block(s, 3);
                const Partition right = p.b_branch() ? quad_block(d, 1) : quad_block(d, 3);
                cf.value = pointwise_sum(left, right);
                cf.display = p.b_branch() ? "(S^3,(S-1)^4,...,1^4) v (d,(d-1)^4,...,1^4)"
                                          : "(S^3,(S-1)^4,...,1^4) v (d^3,(d-1)^4,...,1^4)";
            } else if (p.b_branch()) {
                cf.value = pointwise_sum(quad_block(s + 1, 1), quad_block(d, 1));
                cf.display = "(S+1,S^4,...,1^4) v (d,(d-1)^4,...,1^4)";
            } else {
                cf.value = pointwise_sum(quad_block(s + 1, 3), quad_block(d, 3));
                cf.display = "((S+1)^3,S^4,...,1^4) v (d^3,(d-1)^4,...,1^4)";
            }
            return cf;
        }
    }
    cf.value = from_runs(std::move(out));
    return cf;
}

ClosedForm d_closed_form(const FamilyParams& p, int n) {
    const int a = p.a;
    const int b = p.b;
    std::vector<int> out;
    ClosedForm cf;
    switch (p.which) {
        case SupportCase::Pgl:
            run(out, 1, 1, 1, n);
            cf.display = "(1^n)";
            break;
        case SupportCase::SoOdd:
            out.push_back(2 * b + 1);
            run(out, 2 * b - 1, 1, 2, 2);
            run(out, 2 * a - 1, 1, 2, 2);
            cf.display = "(2b+1,2b-1,2b-1,...,1,1) u (2a-1,2a-1,...,1,1)";
            break;
        case SupportCase::PspSplit:
            run(out, 2 * a, 2 * b + 2, 2, 2);
            run(out, 2 * b, 2, 2, 4);
            cf.display = "(2a,2a,...,2b+2,2b+2,2b,2b,2b,2b,...,2,2,2,2)";
            break;
        case SupportCase::PspTwisted:
        case SupportCase::PsoRho:
            run(out, 2 * b, 2, 2, 2);
            run(out, a, 1, 1, 2);
            run(out, 2 * b, 2, 2, 2);
            cf.display = "(2,2,...,2b,2b) u (1,1,2,2,...,a,a) u (2,2,...,2b,2b)";
            if (p.which == SupportCase::PsoRho) {
                cf.known_inconsistent = b > 0;
                cf.inconsistency_note =
                    "the printed d(lambda) for the PSO rho/etarho case has total "
                    "4b^2+4b+a^2+a, which differs from 2n when b > 0";
            }
            break;
        case SupportCase::PsoSplit:
            run(out, 2 * a - 1, 2 * b + 1, 2, 2);
            run(out, 2 * b - 1, 1, 2, 4);
            cf.display = "(2a-1,2a-1,...,2b+1,2b+1,2b-1^4,...,1^4)";
            break;
    }
    cf.value = from_runs(std::move(out));
    return cf;
}

}  // namespace nilwave
