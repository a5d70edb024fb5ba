#include "xmodlab/group_hom.hpp"

#include <optional>

#include "xmodlab/element_table.hpp"
#include "xmodlab/errors.hpp"
#include "xmodlab/group_ops.hpp"

namespace xmodlab {

struct GroupHom::Evaluator {
  // Small sources: the image of every element.
  std::optional<ElementTable> table;
  std::vector<Permutation> element_images;
  // Large sources: graph subgroup on source points followed by target points.
  std::optional<PermGroup> graph;
};

namespace {

Permutation join(const Permutation& left, const Permutation& right) {
  std::size_t n = left.degree() + right.degree();
  std::vector<Point> images(n);
  for (Point x = 0; x < left.degree(); ++x) images[x] = left[x];
  for (Point x = 0; x < right.degree(); ++x)
    images[left.degree() + x] = static_cast<Point>(left.degree()) + right[x];
  return Permutation::from_images(std::move(images));
}

}  // namespace

GroupHom::GroupHom(PermGroup source, PermGroup target,
                   std::vector<Permutation> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (images_.size() != source_.generators().size())
    throw RelationViolated("expected " +
                           std::to_string(source_.generators().size()) +
                           " generator images, got " +
                           std::to_string(images_.size()));
  for (const auto& img : images_)
    if (!target_.contains(img))
      throw NotSubgroup("generator image " + img.to_string() +
                        " is not in the target group");

  auto eval = std::make_shared<Evaluator>();
  if (source_.order() <= kEnumerationLimit) {
    eval->table.emplace(source_);
    const ElementTable& t = *eval->table;
    std::vector<std::optional<Permutation>> assigned(t.size());
    assigned[0] = target_.identity();
    for (std::size_t i : t.bfs_order()) {
      for (std::size_t g = 0; g < t.generator_count(); ++g) {
        std::size_t j = t.right_mult(i, g);
        Permutation expected = *assigned[i] * images_[g];
        if (!assigned[j]) {
          assigned[j] = std::move(expected);
        } else if (*assigned[j] != expected) {
          throw RelationViolated(
              "assignment is not a homomorphism: " + t[j].to_string() +
              " would map to both " + assigned[j]->to_string() + " and " +
              expected.to_string());
        }
      }
    }
    eval->element_images.reserve(t.size());
    for (auto& a : assigned) eval->element_images.push_back(std::move(*a));
  } else {
    std::vector<Permutation> gens;
    gens.reserve(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      gens.push_back(join(source_.generators()[i], images_[i]));
    PermGroup graph(source_.degree() + target_.degree(), std::move(gens));
    if (graph.order() != source_.order())
      throw RelationViolated(
          "assignment is not a homomorphism: graph subgroup has order " +
          std::to_string(graph.order()) + ", source has order " +
          std::to_string(source_.order()));
    eval->graph.emplace(std::move(graph));
  }
  eval_ = std::move(eval);
}

GroupHom GroupHom::identity(const PermGroup& g) {
  return GroupHom(g, g, g.generators());
}

GroupHom GroupHom::inclusion(const PermGroup& sub, const PermGroup& super) {
  return GroupHom(sub, super, sub.generators());
}

Permutation GroupHom::operator()(const Permutation& g) const {
  if (eval_->table) {
    return eval_->element_images[eval_->table->index_of(g)];
  }
  if (!source_.contains(g))
    throw NotSubgroup(g.to_string() + " is not in the source group");
  // Stripping (g, 1) through the source levels of the graph chain leaves
  // (1, h(g)^-1).
  auto [residue, level] = eval_->graph->sift(join(g, target_.identity()));
  (void)level;
  return residue.restricted(static_cast<Point>(source_.degree()),
                            target_.degree())
      .inverse();
}

PermGroup GroupHom::kernel() const {
  if (eval_->table) {
    std::vector<Permutation> members;
    for (std::size_t i = 0; i < eval_->table->size(); ++i)
      if (eval_->element_images[i].is_identity())
        members.push_back((*eval_->table)[i]);
    return generate_subgroup(source_.degree(), members);
  }
  // Pointwise stabilizer of the target points in the graph subgroup, with
  // the target points placed first.
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < images_.size(); ++i)
    gens.push_back(join(images_[i], source_.generators()[i]));
  std::vector<Point> prefix(target_.degree());
  for (Point x = 0; x < prefix.size(); ++x) prefix[x] = x;
  PermGroup graph(source_.degree() + target_.degree(), std::move(gens), prefix);
  std::vector<Permutation> kernel_gens;
  const auto& chain = graph.stabilizer_chain();
  if (chain.size() > prefix.size())
    for (const auto& s : chain[prefix.size()].strong_generators)
      kernel_gens.push_back(
          s.restricted(static_cast<Point>(target_.degree()), source_.degree()));
  return generate_subgroup(source_.degree(), kernel_gens);
}

PermGroup GroupHom::image() const {
  return generate_subgroup(target_.degree(), images_);
}

bool GroupHom::is_injective() const { return kernel().is_trivial(); }

bool GroupHom::is_bijective() const {
  return source_.order() == target_.order() && is_injective();
}

GroupHom GroupHom::then(const GroupHom& next) const {
  std::vector<Permutation> composed;
  composed.reserve(images_.size());
  for (const auto& img : images_) composed.push_back(next(img));
  return GroupHom(source_, next.target(), std::move(composed));
}

}  // namespace xmodlab
