#include "bct/weights.hpp"

#include <cmath>
#include <cstdio>
#include <optional>

#include "bct/errors.hpp"

namespace bct {

namespace {

std::string fmt_num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

NodeWeightFunction NodeWeightFunction::unity(const TreeSpace& space) {
    NodeWeightFunction w(space);
    Factor f;
    f.kind = Kind::Unity;
    w.factors_.push_back(std::move(f));
    w.spec_ = "unity";
    return w;
}

NodeWeightFunction NodeWeightFunction::depth_indicator(const TreeSpace& space, int l) {
    if (l < 0 || l > space.max_depth())
        throw ValidationError("depth indicator level must be in 0..L, got " + std::to_string(l));
    NodeWeightFunction w(space);
    Factor f;
    f.kind = Kind::DepthIndicator;
    f.l = l;
    w.factors_.push_back(std::move(f));
    w.spec_ = "depth:" + std::to_string(l);
    return w;
}

NodeWeightFunction NodeWeightFunction::renewal_indicator(const TreeSpace& space, Symbol a) {
    if (static_cast<int>(a) >= space.m())
        throw ValidationError("renewal symbol out of alphabet range");
    NodeWeightFunction w(space);
    Factor f;
    f.kind = Kind::RenewalIndicator;
    f.sym = a;
    w.factors_.push_back(std::move(f));
    w.spec_ = "renewal:" + std::to_string(static_cast<int>(a));
    return w;
}

NodeWeightFunction NodeWeightFunction::exponential(const TreeSpace& space, double alpha) {
    if (!(alpha > 0)) throw ValidationError("exponential rate must be > 0");
    NodeWeightFunction w(space);
    Factor f;
    f.kind = Kind::Exponential;
    f.param = alpha;
    f.log_below = f.log_at = -alpha;
    w.factors_.push_back(std::move(f));
    w.spec_ = "exp:" + fmt_num(alpha);
    return w;
}

NodeWeightFunction NodeWeightFunction::length_exponential(const TreeSpace& space) {
    NodeWeightFunction w(space);
    Factor f;
    f.kind = Kind::LengthExponential;
    w.factors_.push_back(std::move(f));
    w.spec_ = "lenexp";
    return w;
}

NodeWeightFunction NodeWeightFunction::ctw(const TreeSpace& space) {
    NodeWeightFunction w(space);
    Factor f;
    f.kind = Kind::Ctw;
    f.log_below = std::log(0.25);
    f.log_at = std::log(0.5);
    w.factors_.push_back(std::move(f));
    w.spec_ = "ctw";
    return w;
}

NodeWeightFunction NodeWeightFunction::general_ctw(const TreeSpace& space, double beta) {
    if (!(beta > 0.0 && beta < 1.0)) throw ValidationError("gctw beta must be in (0, 1)");
    NodeWeightFunction w(space);
    Factor f;
    f.kind = Kind::GeneralCtw;
    f.param = beta;
    const double stem = std::log1p(-beta) / (space.m() - 1);  // log (1-β)^(1/(m-1))
    f.log_below = stem + std::log(beta);
    f.log_at = stem;
    w.factors_.push_back(std::move(f));
    w.spec_ = "gctw:" + fmt_num(beta);
    return w;
}

NodeWeightFunction NodeWeightFunction::target_depth(const TreeSpace& space, double c, int l) {
    if (!(c > 1.0)) throw ValidationError("target depth base must be > 1");
    if (l < 0 || l > space.max_depth())
        throw ValidationError("target depth must be in 0..L, got " + std::to_string(l));
    NodeWeightFunction w(space);
    Factor f;
    f.kind = Kind::TargetDepth;
    f.param = c;
    f.l = l;
    f.log_base = std::log(c);
    w.factors_.push_back(std::move(f));
    w.spec_ = "target:" + fmt_num(c) + "," + std::to_string(l);
    return w;
}

NodeWeightFunction NodeWeightFunction::custom(const TreeSpace& space, std::string name,
                                              CustomFn fn) {
    NodeWeightFunction w(space);
    Factor f;
    f.kind = Kind::Custom;
    f.fn = std::move(fn);
    w.factors_.push_back(std::move(f));
    w.spec_ = std::move(name);
    return w;
}

NodeWeightFunction NodeWeightFunction::operator*(const NodeWeightFunction& other) const {
    if (!(space_ == other.space_))
        throw ValidationError("cannot multiply weight functions over different tree spaces");
    NodeWeightFunction w(space_);
    w.factors_ = factors_;
    w.factors_.insert(w.factors_.end(), other.factors_.begin(), other.factors_.end());
    w.spec_ = spec_ + "*" + other.spec_;
    return w;
}

LogWeight NodeWeightFunction::eval_factor(const Factor& f, int depth,
                                          std::span<const Symbol> recent_first) const {
    switch (f.kind) {
        case Kind::Unity:
            return LogWeight::one();
        case Kind::DepthIndicator:
            return depth <= f.l ? LogWeight::one() : LogWeight::zero();
        case Kind::RenewalIndicator:
            // zero iff the symbol occurs anywhere but the oldest position
            for (int i = 0; i + 1 < depth; ++i)
                if (recent_first[i] == f.sym) return LogWeight::zero();
            return LogWeight::one();
        case Kind::Exponential:
            return LogWeight::from_log(f.log_below);
        case Kind::LengthExponential:
            return LogWeight::from_log(-static_cast<double>(depth));
        case Kind::Ctw:
        case Kind::GeneralCtw:
            return LogWeight::from_log(depth < space_.max_depth() ? f.log_below : f.log_at);
        case Kind::TargetDepth:
            return LogWeight::from_log(-std::abs(depth - f.l) * f.log_base);
        case Kind::Custom:
            return f.fn(depth, recent_first);
    }
    return LogWeight::zero();  // unreachable
}

LogWeight NodeWeightFunction::eval_recent_first(std::span<const Symbol> recent_first) const {
    const int depth = static_cast<int>(recent_first.size());
    if (depth > space_.max_depth())
        throw ValidationError("node deeper than the tree space (depth overflow)");
    LogWeight w = LogWeight::one();
    for (const Factor& f : factors_) {
        w *= eval_factor(f, depth, recent_first);
        if (w.is_zero()) return w;
    }
    return w;
}

LogWeight NodeWeightFunction::eval_node(const Context& s) const {
    auto syms = s.symbols();
    std::vector<Symbol> recent(syms.rbegin(), syms.rend());
    return eval_recent_first(recent);
}

LogWeight NodeWeightFunction::eval_tree(const ContextTree& tree) const {
    if (tree.space().m() != space_.m())
        throw ValidationError("tree alphabet size does not match the weight function");
    if (tree.depth() > space_.max_depth())
        throw ValidationError("tree deeper than the weight function's space");
    LogWeight w = LogWeight::one();
    for (const Context& s : tree.leaves()) {
        w *= eval_node(s);
        if (w.is_zero()) return w;
    }
    return w;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(std::string_view s, std::string_view what) {
    try {
        std::size_t used = 0;
        double v = std::stod(std::string(s), &used);
        if (used != s.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ValidationError("bad " + std::string(what) + " value \"" + std::string(s) + "\"");
    }
}

int parse_int(std::string_view s, std::string_view what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(std::string(s), &used);
        if (used != s.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ValidationError("bad " + std::string(what) + " value \"" + std::string(s) + "\"");
    }
}

NodeWeightFunction parse_factor(std::string_view token, const Alphabet& alphabet,
                                const TreeSpace& space) {
    std::string_view name = token;
    std::string_view arg;
    if (auto pos = token.find(':'); pos != std::string_view::npos) {
        name = token.substr(0, pos);
        arg = token.substr(pos + 1);
    }
    auto require_arg = [&](bool needed) {
        if (needed && arg.empty())
            throw ValidationError("prior factor \"" + std::string(token) +
                                  "\" is missing its parameter");
        if (!needed && !arg.empty())
            throw ValidationError("prior factor \"" + std::string(name) +
                                  "\" takes no parameter");
    };
    if (name == "unity") {
        require_arg(false);
        return NodeWeightFunction::unity(space);
    }
    if (name == "depth") {
        require_arg(true);
        return NodeWeightFunction::depth_indicator(space, parse_int(arg, "depth"));
    }
    if (name == "renewal") {
        require_arg(true);
        if (arg.size() != 1)
            throw ValidationError("renewal symbol must be a single alphabet character");
        auto code = alphabet.code(arg[0]);
        if (!code)
            throw ValidationError(std::string("renewal symbol '") + arg[0] +
                                  "' is not in the alphabet");
        return NodeWeightFunction::renewal_indicator(space, *code);
    }
    if (name == "exp") {
        require_arg(true);
        return NodeWeightFunction::exponential(space, parse_double(arg, "exp rate"));
    }
    if (name == "lenexp") {
        require_arg(false);
        return NodeWeightFunction::length_exponential(space);
    }
    if (name == "ctw") {
        require_arg(false);
        return NodeWeightFunction::ctw(space);
    }
    if (name == "gctw") {
        require_arg(true);
        return NodeWeightFunction::general_ctw(space, parse_double(arg, "gctw beta"));
    }
    if (name == "target") {
        require_arg(true);
        auto parts = split(arg, ',');
        if (parts.size() != 2)
            throw ValidationError("target factor needs \"target:C,L\", got \"" +
                                  std::string(token) + "\"");
        return NodeWeightFunction::target_depth(space, parse_double(parts[0], "target base"),
                                                parse_int(parts[1], "target depth"));
    }
    throw ValidationError("unknown prior factor \"" + std::string(name) + "\"");
}

}  // namespace

NodeWeightFunction parse_prior_spec(std::string_view text, const Alphabet& alphabet,
                                    const TreeSpace& space) {
    if (text.empty()) throw ValidationError("empty prior specification");
    auto tokens = split(text, '*');
    std::optional<NodeWeightFunction> result;
    for (auto token : tokens) {
        if (token.empty()) throw ValidationError("empty factor in prior \"" + std::string(text) +
                                                 "\"");
        auto factor = parse_factor(token, alphabet, space);
        result = result ? *result * factor : factor;
    }
    return *result;
}

}  // namespace bct
