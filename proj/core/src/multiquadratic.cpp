#include "ratsos/multiquadratic.hpp"

#include <bit>
#include <sstream>

#include "ratsos/error.hpp"

namespace ratsos {

GeneratorContext::GeneratorContext(std::vector<Radicand> generators)
    : generators_(std::move(generators)) {}

ContextPtr GeneratorContext::make(std::vector<Radicand> generators) {
  if (generators.size() > kMaxGenerators) {
    throw UsageError("at most " + std::to_string(kMaxGenerators) + " generators are supported");
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (generators[i] == generators[j]) {
        throw UsageError("duplicate generator radicand " + generators[i].value().get_str());
      }
    }
  }
  return ContextPtr(new GeneratorContext(std::move(generators)));
}

const Radicand& GeneratorContext::generator(std::size_t index) const {
  if (index >= generators_.size()) throw UsageError("generator index out of range");
  return generators_[index];
}

std::optional<std::size_t> GeneratorContext::index_of(const Integer& radicand) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].value() == radicand) return i;
  }
  return std::nullopt;
}

Integer GeneratorContext::subset_product(Subset s) const {
  Integer out = 1;
  while (s != 0) {
    const auto k = static_cast<std::size_t>(std::countr_zero(s));
    out *= generators_.at(k).value();
    s &= s - 1;
  }
  return out;
}

ContextPtr GeneratorContext::with_appended(const Radicand& r) const {
  auto gens = generators_;
  gens.push_back(r);
  return make(std::move(gens));
}

ContextPtr GeneratorContext::without(std::size_t index) const {
  if (index >= generators_.size()) throw UsageError("generator index out of range");
  auto gens = generators_;
  gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(index));
  return make(std::move(gens));
}

ContextPtr common_context(const ContextPtr& a, const ContextPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (*a == *b) return a;
  throw UsageError("operands belong to different generator contexts");
}

MQElem::MQElem(const Rat& r) {
  if (!r.is_zero()) coords_.emplace(0, r);
}

MQElem::MQElem(ContextPtr context, const Rat& r) : context_(std::move(context)) {
  if (!r.is_zero()) coords_.emplace(0, r);
}

MQElem MQElem::monomial(ContextPtr context, Subset s, const Rat& c) {
  if (s != 0 && (!context || (s >> context->size()) != 0)) {
    throw UsageError("subset refers to generators outside the context");
  }
  MQElem out;
  out.context_ = std::move(context);
  if (!c.is_zero()) out.coords_.emplace(s, c);
  return out;
}

MQElem MQElem::generator(ContextPtr context, std::size_t index) {
  if (!context || index >= context->size()) throw UsageError("generator index out of range");
  return monomial(std::move(context), Subset{1} << index, Rat(1));
}

MQElem MQElem::radical(ContextPtr context, const Integer& n) {
  if (n == 0) return MQElem(std::move(context), Rat(0));
  const auto target = squarefree_part(n);
  if (target.squarefree == 1) return MQElem(std::move(context), Rat(target.root));
  const std::size_t s = context ? context->size() : 0;
  for (std::uint64_t wide = 1; wide < (std::uint64_t{1} << s); ++wide) {
    const auto mask = static_cast<Subset>(wide);
    const auto have = squarefree_part(context->subset_product(mask));
    if (have.squarefree == target.squarefree) {
      // sqrt(n) = c sqrt(sf), sqrt(prod) = k sqrt(sf)
      return monomial(context, mask, Rat(target.root, have.root));
    }
  }
  throw UsageError("no subset of the context represents sqrt(" + n.get_str() + ")");
}

Rat MQElem::coordinate(Subset s) const {
  const auto it = coords_.find(s);
  return it == coords_.end() ? Rat(0) : it->second;
}

bool MQElem::is_rational() const {
  return coords_.empty() || (coords_.size() == 1 && coords_.begin()->first == 0);
}

void MQElem::check_index(std::size_t g) const {
  if (!context_ || g >= context_->size()) throw UsageError("generator index out of range");
}

MQElem MQElem::conjugate(std::size_t g) const {
  check_index(g);
  MQElem out = *this;
  const Subset bit = Subset{1} << g;
  for (auto& [s, c] : out.coords_) {
    if ((s & bit) != 0) c = -c;
  }
  return out;
}

std::pair<MQElem, MQElem> MQElem::split(std::size_t g) const {
  check_index(g);
  const Subset bit = Subset{1} << g;
  MQElem a(context_, Rat(0));
  MQElem b(context_, Rat(0));
  for (const auto& [s, c] : coords_) {
    if ((s & bit) != 0) {
      b.coords_.emplace(s & ~bit, c);
    } else {
      a.coords_.emplace(s, c);
    }
  }
  return {std::move(a), std::move(b)};
}

MQElem MQElem::reembed(const ContextPtr& target) const {
  MQElem out(target, Rat(0));
  if (coords_.empty()) return out;
  std::vector<Subset> image;
  if (context_) {
    image.reserve(context_->size());
    for (const auto& r : context_->generators()) {
      const auto idx = target ? target->index_of(r.value()) : std::nullopt;
      image.push_back(idx ? (Subset{1} << *idx) : Subset{0});
    }
  }
  for (const auto& [s, c] : coords_) {
    Subset mapped = 0;
    Subset rest = s;
    while (rest != 0) {
      const auto k = static_cast<std::size_t>(std::countr_zero(rest));
      if (image[k] == 0) {
        throw UsageError("generator sqrt(" + context_->generator(k).value().get_str() +
                         ") is not present in the target context");
      }
      mapped |= image[k];
      rest &= rest - 1;
    }
    out.coords_.emplace(mapped, c);
  }
  return out;
}

MQElem MQElem::operator-() const {
  MQElem out = *this;
  for (auto& [s, c] : out.coords_) c = -c;
  return out;
}

MQElem& MQElem::operator+=(const MQElem& rhs) {
  context_ = common_context(context_, rhs.context_);
  for (const auto& [s, c] : rhs.coords_) {
    auto [it, inserted] = coords_.emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coords_.erase(it);
    }
  }
  return *this;
}

MQElem& MQElem::operator-=(const MQElem& rhs) { return *this += -rhs; }

MQElem& MQElem::operator*=(const MQElem& rhs) { return *this = *this * rhs; }

MQElem& MQElem::operator*=(const Rat& rhs) {
  if (rhs.is_zero()) {
    coords_.clear();
    return *this;
  }
  for (auto& [s, c] : coords_) c *= rhs;
  return *this;
}

MQElem operator*(const MQElem& a, const MQElem& b) {
  MQElem out;
  out.context_ = common_context(a.context_, b.context_);
  for (const auto& [sa, ca] : a.coords_) {
    for (const auto& [sb, cb] : b.coords_) {
      const Subset common = sa & sb;
      Rat term = ca * cb;
      if (common != 0) term *= Rat(out.context_->subset_product(common));
      auto [it, inserted] = out.coords_.emplace(sa ^ sb, term);
      if (!inserted) {
        it->second += term;
        if (it->second.is_zero()) out.coords_.erase(it);
      }
    }
  }
  return out;
}

bool operator==(const MQElem& a, const MQElem& b) {
  if (a.coords_ != b.coords_) return false;
  if (a.is_rational()) return true;
  return a.context_ == b.context_ || *a.context_ == *b.context_;
}

std::string MQElem::str() const {
  if (coords_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : coords_) {
    Rat coeff = c;
    Integer radicand = 1;
    if (s != 0) {
      const auto sf = squarefree_part(context_->subset_product(s));
      coeff *= Rat(sf.root);
      radicand = sf.squarefree;
    }
    const bool negative = coeff.sign() < 0;
    const Rat magnitude = negative ? -coeff : coeff;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (radicand == 1) {
      os << magnitude.str();
    } else {
      if (magnitude != Rat(1)) os << magnitude.str() << "*";
      os << "sqrt(" << radicand.get_str() << ")";
    }
  }
  return os.str();
}

MQElem conjugate(const MQElem& x, std::size_t g) { return x.conjugate(g); }

std::pair<MQElem, MQElem> split(const MQElem& x, std::size_t g) { return x.split(g); }

}  // namespace ratsos
