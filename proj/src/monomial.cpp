#include "gridzero/monomial.hpp"

namespace gridzero {

std::string Monomial::str() const {
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (e_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += kVarNames[i];
        if (e_[i] >= 2) out += '^' + std::to_string(e_[i]);
    }
    return out.empty() ? "1" : out;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (kind != OrderKind::lex) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db ? -1 : 1;
    }
    switch (kind) {
        case OrderKind::lex:
        case OrderKind::grlex:
            for (Var v : precedence) {
                int ea = a.exponent(v), eb = b.exponent(v);
                if (ea != eb) return ea < eb ? -1 : 1;
            }
            return 0;
        case OrderKind::grevlex:
            // Equal degree: the larger monomial has the smaller exponent on
            // the last variable where they differ (scanning lowest
            // precedence first).
            for (int i = 3; i >= 0; --i) {
                Var v = precedence[static_cast<std::size_t>(i)];
                int ea = a.exponent(v), eb = b.exponent(v);
                if (ea != eb) return ea > eb ? -1 : 1;
            }
            return 0;
    }
    return 0;
}

std::string MonomialOrder::str() const {
    std::string name;
    switch (kind) {
        case OrderKind::lex: name = "lex"; break;
        case OrderKind::grlex: name = "grlex"; break;
        case OrderKind::grevlex: name = "grevlex"; break;
    }
    name += ':';
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) name += '>';
        name += kVarNames[static_cast<int>(precedence[i])];
    }
    return name;
}

const MonomialOrder& MonomialOrder::global() {
    static const MonomialOrder order{};
    return order;
}

}  // namespace gridzero
