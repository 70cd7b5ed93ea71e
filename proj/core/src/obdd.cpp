#include "xorsym/obdd.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "xorsym/errors.hpp"

namespace xorsym {

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) toks.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Obdd::Builder::Builder(std::vector<std::string> order) {
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (order[i] == order[j]) throw std::invalid_argument("duplicate variable in order");
  order_ = std::move(order);
  const auto term_level = static_cast<std::uint32_t>(order_.size() + 1);
  nodes_ = {Node{term_level, kTerm0, kTerm0}, Node{term_level, kTerm1, kTerm1}};
}

Obdd::NodeId Obdd::Builder::add_node(std::uint32_t level, NodeId hi, NodeId lo) {
  if (level < 1 || level > order_.size()) throw std::invalid_argument("node level out of range");
  if (hi >= nodes_.size() || lo >= nodes_.size())
    throw std::invalid_argument("unknown child node");
  if (nodes_[hi].level <= level || nodes_[lo].level <= level)
    throw std::invalid_argument("child level must be strictly greater");
  nodes_.push_back(Node{level, hi, lo});
  return static_cast<NodeId>(nodes_.size() - 1);
}

void Obdd::Builder::add_output(NodeId id) {
  if (id >= nodes_.size()) throw std::invalid_argument("unknown output node");
  outputs_.push_back(id);
}

Obdd Obdd::Builder::build() && {
  Obdd d;
  d.order_ = std::move(order_);
  d.nodes_ = std::move(nodes_);
  d.outputs_ = std::move(outputs_);
  return d;
}

std::vector<std::vector<Obdd::NodeId>> Obdd::nodes_by_level() const {
  std::vector<std::vector<NodeId>> by_level(order_.size() + 2);
  for (NodeId id = 2; id < nodes_.size(); ++id) by_level[nodes_[id].level].push_back(id);
  return by_level;
}

bool Obdd::eval_output(std::size_t k, const BitVec& x) const {
  if (x.size() != num_vars()) throw std::invalid_argument("input length mismatch");
  NodeId cur = outputs_.at(k);
  while (!is_terminal(cur)) {
    const Node& nd = nodes_[cur];
    cur = x.get(nd.level - 1) ? nd.hi : nd.lo;
  }
  return cur == kTerm1;
}

BitVec Obdd::eval(const BitVec& x) const {
  BitVec out(outputs_.size());
  for (std::size_t k = 0; k < outputs_.size(); ++k) out.set(k, eval_output(k, x));
  return out;
}

Obdd Obdd::reduced() const {
  const std::size_t n = num_vars();
  Builder b(order_);
  std::vector<NodeId> remap(nodes_.size(), kTerm0);
  remap[kTerm0] = kTerm0;
  remap[kTerm1] = kTerm1;
  const auto by_level = nodes_by_level();
  std::map<std::tuple<std::uint32_t, NodeId, NodeId>, NodeId> uniq;
  for (std::size_t lvl = n; lvl >= 1; --lvl) {
    for (NodeId id : by_level[lvl]) {
      const NodeId h = remap[nodes_[id].hi];
      const NodeId l = remap[nodes_[id].lo];
      if (h == l) {
        remap[id] = h;
        continue;
      }
      const auto key = std::make_tuple(static_cast<std::uint32_t>(lvl), h, l);
      const auto it = uniq.find(key);
      if (it != uniq.end()) {
        remap[id] = it->second;
      } else {
        remap[id] = b.add_node(static_cast<std::uint32_t>(lvl), h, l);
        uniq.emplace(key, remap[id]);
      }
    }
  }
  for (NodeId out : outputs_) b.add_output(remap[out]);
  return std::move(b).build();
}

Obdd Obdd::parse(std::string_view text) {
  struct RawNode {
    std::uint64_t file_id;
    std::uint32_t level;
    std::string hi, lo;
    std::size_t line;
  };

  std::vector<std::string> order;
  bool have_order = false;
  std::vector<RawNode> raw;
  std::unordered_map<std::uint64_t, std::size_t> by_file_id;  // file id -> raw index
  std::vector<std::string> output_toks;
  std::size_t outputs_line = 0;
  std::unordered_map<std::string, std::uint32_t> level_of_var;

  auto parse_id = [](const std::string& tok, std::size_t line) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value == 0)
      throw parse_error(line, "expected a positive node id, got '" + tok + "'");
    return value;
  };

  std::size_t lineno = 0;
  std::string_view rest = text;
  while (!rest.empty()) {
    const std::size_t nl = rest.find('\n');
    const std::string_view line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    ++lineno;
    const std::vector<std::string> toks = tokens_of(line);
    if (toks.empty()) continue;

    if (toks[0] == "order") {
      if (have_order) throw parse_error(lineno, "duplicate order line");
      order.assign(toks.begin() + 1, toks.end());
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (!level_of_var.emplace(order[i], static_cast<std::uint32_t>(i + 1)).second)
          throw parse_error(lineno, "duplicate variable in order: " + order[i]);
      }
      have_order = true;
      continue;
    }
    if (toks[0] == "node") {
      if (!have_order) throw parse_error(lineno, "node line before order line");
      if (toks.size() != 5) throw parse_error(lineno, "expected 'node <id> <var> <hi> <lo>'");
      const std::uint64_t file_id = parse_id(toks[1], lineno);
      const auto var_it = level_of_var.find(toks[2]);
      if (var_it == level_of_var.end()) throw parse_error(lineno, "unknown variable: " + toks[2]);
      if (!by_file_id.emplace(file_id, raw.size()).second)
        throw parse_error(lineno, "duplicate node id: " + toks[1]);
      raw.push_back(RawNode{file_id, var_it->second, toks[3], toks[4], lineno});
      continue;
    }
    if (toks[0] == "outputs") {
      if (outputs_line != 0) throw parse_error(lineno, "duplicate outputs line");
      if (toks.size() < 2) throw parse_error(lineno, "outputs line names no nodes");
      output_toks.assign(toks.begin() + 1, toks.end());
      outputs_line = lineno;
      continue;
    }
    throw parse_error(lineno, "malformed line");
  }

  if (!have_order) throw parse_error(0, "missing order line");
  if (outputs_line == 0) throw parse_error(0, "missing outputs line");

  // Insert deepest levels first so children are always present when a node is
  // added; a child that is still missing then violates the order.
  std::vector<std::size_t> insertion(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) insertion[i] = i;
  std::stable_sort(insertion.begin(), insertion.end(),
                   [&raw](std::size_t a, std::size_t b) { return raw[a].level > raw[b].level; });

  Builder b(order);
  std::unordered_map<std::uint64_t, NodeId> built;
  auto resolve_child = [&](const std::string& tok, std::uint32_t parent_level,
                           std::size_t line) -> NodeId {
    if (tok == "@0") return kTerm0;
    if (tok == "@1") return kTerm1;
    const std::uint64_t file_id = parse_id(tok, line);
    const auto raw_it = by_file_id.find(file_id);
    if (raw_it == by_file_id.end()) throw parse_error(line, "unknown child id: " + tok);
    if (raw[raw_it->second].level <= parent_level)
      throw parse_error(line, "child " + tok + " violates the variable order");
    return built.at(file_id);
  };
  for (std::size_t idx : insertion) {
    const RawNode& rn = raw[idx];
    const NodeId h = resolve_child(rn.hi, rn.level, rn.line);
    const NodeId l = resolve_child(rn.lo, rn.level, rn.line);
    built.emplace(rn.file_id, b.add_node(rn.level, h, l));
  }
  for (const std::string& tok : output_toks) {
    if (tok == "@0") {
      b.add_output(kTerm0);
    } else if (tok == "@1") {
      b.add_output(kTerm1);
    } else {
      const std::uint64_t file_id = parse_id(tok, outputs_line);
      const auto it = built.find(file_id);
      if (it == built.end()) throw parse_error(outputs_line, "unknown output id: " + tok);
      b.add_output(it->second);
    }
  }
  return std::move(b).build();
}

namespace {

struct NodeKey {
  std::uint32_t level;
  Obdd::NodeId hi;
  Obdd::NodeId lo;
  friend bool operator==(const NodeKey&, const NodeKey&) = default;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const {
    std::size_t seed = std::hash<std::uint32_t>{}(k.level);
    seed ^= std::hash<std::uint32_t>{}(k.hi) + 0x9e3779b9 + (seed << 6) + (seed >> 2);
    seed ^= std::hash<std::uint32_t>{}(k.lo) + 0x9e3779b9 + (seed << 6) + (seed >> 2);
    return seed;
  }
};

// Apply-based construction context: a unique table keyed by (level, hi, lo)
// plus one memo table per binary operator.
class ApplyCtx {
public:
  using NodeId = Obdd::NodeId;

  ApplyCtx(std::size_t num_vars, std::size_t node_cap) : cap_(node_cap) {
    const auto term_level = static_cast<std::uint32_t>(num_vars + 1);
    nodes_ = {Obdd::Node{term_level, 0, 0}, Obdd::Node{term_level, 1, 1}};
  }

  NodeId mk(std::uint32_t level, NodeId hi, NodeId lo) {
    if (hi == lo) return hi;
    const NodeKey key{level, hi, lo};
    const auto it = unique_.find(key);
    if (it != unique_.end()) return it->second;
    if (nodes_.size() - 2 >= cap_)
      throw resource_error("node budget of " + std::to_string(cap_) + " nodes exceeded");
    nodes_.push_back(Obdd::Node{level, hi, lo});
    const auto id = static_cast<NodeId>(nodes_.size() - 1);
    unique_.emplace(key, id);
    return id;
  }

  NodeId apply(GateOp op, NodeId a, NodeId b) {
    switch (op) {
      case GateOp::And:
        if (a == 0 || b == 0) return 0;
        if (a == 1) return b;
        if (b == 1) return a;
        if (a == b) return a;
        break;
      case GateOp::Or:
        if (a == 1 || b == 1) return 1;
        if (a == 0) return b;
        if (b == 0) return a;
        if (a == b) return a;
        break;
      case GateOp::Xor:
        if (a == b) return 0;
        if (a == 0) return b;
        if (b == 0) return a;
        break;
      default:
        throw std::logic_error("apply expects a binary operator");
    }
    if (a > b) std::swap(a, b);
    auto& memo = memo_for(op);
    const std::uint64_t key = (std::uint64_t{a} << 32) | b;
    const auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const std::uint32_t la = nodes_[a].level;
    const std::uint32_t lb = nodes_[b].level;
    const std::uint32_t lvl = std::min(la, lb);
    const NodeId ah = la == lvl ? nodes_[a].hi : a;
    const NodeId al = la == lvl ? nodes_[a].lo : a;
    const NodeId bh = lb == lvl ? nodes_[b].hi : b;
    const NodeId bl = lb == lvl ? nodes_[b].lo : b;
    const NodeId r = mk(lvl, apply(op, ah, bh), apply(op, al, bl));
    memo.emplace(key, r);
    return r;
  }

  NodeId negate(NodeId a) { return apply(GateOp::Xor, a, Obdd::kTerm1); }

  const std::vector<Obdd::Node>& nodes() const { return nodes_; }

private:
  std::unordered_map<std::uint64_t, NodeId>& memo_for(GateOp op) {
    switch (op) {
      case GateOp::And: return and_memo_;
      case GateOp::Or: return or_memo_;
      default: return xor_memo_;
    }
  }

  std::size_t cap_;
  std::vector<Obdd::Node> nodes_;
  std::unordered_map<NodeKey, NodeId, NodeKeyHash> unique_;
  std::unordered_map<std::uint64_t, NodeId> and_memo_, or_memo_, xor_memo_;
};

}  // namespace

Obdd compile(const Circuit& c, const std::vector<std::string>& order, std::size_t node_cap) {
  const std::size_t n = c.num_inputs();
  if (order.size() != n) throw std::invalid_argument("order is not a permutation of the inputs");
  std::unordered_map<std::string, std::uint32_t> level_of_name;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (!level_of_name.emplace(order[i], static_cast<std::uint32_t>(i + 1)).second)
      throw std::invalid_argument("order is not a permutation of the inputs");
  std::vector<std::uint32_t> input_level(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = level_of_name.find(c.input_names()[i]);
    if (it == level_of_name.end())
      throw std::invalid_argument("order is not a permutation of the inputs");
    input_level[i] = it->second;
  }

  ApplyCtx ctx(n, node_cap);
  std::vector<Obdd::NodeId> sig(n + c.num_gates());
  for (std::size_t i = 0; i < n; ++i) sig[i] = ctx.mk(input_level[i], Obdd::kTerm1, Obdd::kTerm0);
  std::size_t idx = n;
  for (const Circuit::Gate& g : c.gates()) {
    Obdd::NodeId v = Obdd::kTerm0;
    switch (g.op) {
      case GateOp::Not:
        v = ctx.negate(sig[g.operands[0]]);
        break;
      case GateOp::And:
      case GateOp::Or:
      case GateOp::Xor:
        v = sig[g.operands[0]];
        for (std::size_t k = 1; k < g.operands.size(); ++k)
          v = ctx.apply(g.op, v, sig[g.operands[k]]);
        break;
      case GateOp::Const0:
        v = Obdd::kTerm0;
        break;
      case GateOp::Const1:
        v = Obdd::kTerm1;
        break;
    }
    sig[idx++] = v;
  }

  // Keep only nodes reachable from the outputs.
  const auto& nodes = ctx.nodes();
  std::vector<char> reach(nodes.size(), 0);
  std::vector<Obdd::NodeId> stack;
  for (Circuit::Signal out : c.outputs()) {
    const Obdd::NodeId id = sig[out];
    if (id > Obdd::kTerm1 && !reach[id]) {
      reach[id] = 1;
      stack.push_back(id);
    }
  }
  while (!stack.empty()) {
    const Obdd::NodeId id = stack.back();
    stack.pop_back();
    for (const Obdd::NodeId child : {nodes[id].hi, nodes[id].lo}) {
      if (child > Obdd::kTerm1 && !reach[child]) {
        reach[child] = 1;
        stack.push_back(child);
      }
    }
  }
  std::vector<Obdd::NodeId> keep;
  for (Obdd::NodeId id = 2; id < nodes.size(); ++id)
    if (reach[id]) keep.push_back(id);
  std::stable_sort(keep.begin(), keep.end(), [&nodes](Obdd::NodeId a, Obdd::NodeId b) {
    return nodes[a].level > nodes[b].level;
  });

  Obdd::Builder b(order);
  std::vector<Obdd::NodeId> remap(nodes.size(), Obdd::kTerm0);
  remap[Obdd::kTerm0] = Obdd::kTerm0;
  remap[Obdd::kTerm1] = Obdd::kTerm1;
  for (Obdd::NodeId id : keep)
    remap[id] = b.add_node(nodes[id].level, remap[nodes[id].hi], remap[nodes[id].lo]);
  for (Circuit::Signal out : c.outputs()) b.add_output(remap[sig[out]]);
  return std::move(b).build();
}

}  // namespace xorsym
