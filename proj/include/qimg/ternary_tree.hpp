// Copyright 2026 The qimg authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*!
  \file ternary_tree.hpp
  \brief Ternary-tree ESOP representation and the complement-rule minimizer

  A cover is stored as a trie over the cube alphabet {0, -, 1}: every
  root-to-leaf path is one cube and tree levels correspond to variables under
  the current rotation order.  Minimization interleaves two passes:

  - merge_leaves applies the complement rule ab XOR ab' = a to every
    bottom-level sibling pair (0, 1) whose don't-care slot is free, turning
    two leaves into one;
  - rotate cuts the root, appends the root symbol to every leaf of the three
    detached subtrees and merges them back, cyclically shifting the variable
    order so the next pass sees fresh sibling pairs.

  One rotation per variable followed by a trailing merge restores the
  original variable order and harvests every reduction the rule can reach.
*/

#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cube.hpp"

namespace qimg
{

class ternary_tree;
ternary_tree merge_trees( ternary_tree t1, ternary_tree const& t2 );

class ternary_tree
{
public:
  /*! \brief Sentinel for an absent child. */
  static constexpr uint32_t npos = std::numeric_limits<uint32_t>::max();

  /*! \brief Empty tree: a childless root at depth bound `num_vars`. */
  explicit ternary_tree( uint32_t num_vars )
      : num_vars_( num_vars )
  {
    if ( num_vars > cube::max_vars )
    {
      throw std::invalid_argument( "ternary_tree supports at most 64 variables" );
    }
    root_ = new_node();
  }

  /*! \brief Builds the tree holding exactly the cover's cube set. */
  explicit ternary_tree( esop_cover const& cover )
      : ternary_tree( cover.num_vars )
  {
    for ( auto const& c : cover.cubes )
    {
      insert( c );
    }
  }

  uint32_t num_vars() const { return num_vars_; }
  uint32_t root() const { return root_; }

  uint32_t child( uint32_t node, trit branch ) const
  {
    return nodes_[node].c[static_cast<uint8_t>( branch )];
  }

  bool has_children( uint32_t node ) const
  {
    return nodes_[node].c[0] != npos || nodes_[node].c[1] != npos || nodes_[node].c[2] != npos;
  }

  /*! \brief Number of cubes (root-to-leaf paths) currently stored. */
  size_t cube_count() const { return cube_count_; }

  /*! \brief Live node count, root included. */
  size_t node_count() const { return nodes_.size() - free_.size(); }

  /*! \brief Times two identical full paths collapsed into one during a merge.
   *
   * Dropping one of two equal cubes changes XOR semantics, so this staying at
   * zero is part of the pipeline's health: the three rotated subtrees always
   * end in distinct appended symbols and can never collide.
   */
  uint64_t duplicate_leaf_merges() const { return dup_merges_; }

  /*! \brief Permutation mapping tree level to original variable index. */
  std::vector<uint32_t> var_order() const
  {
    std::vector<uint32_t> order( num_vars_ );
    for ( uint32_t level = 0; level < num_vars_; ++level )
    {
      order[level] = ( level + shift_ ) % num_vars_;
    }
    return order;
  }

  bool var_order_is_identity() const { return shift_ == 0; }

  /*! \brief Inserts one cube; rejects length mismatches and duplicates. */
  void insert( cube const& c )
  {
    if ( c.num_vars() != num_vars_ )
    {
      throw std::invalid_argument( "malformed cover: cube " + c.str() + " has length " +
                                   std::to_string( c.num_vars() ) + ", expected " +
                                   std::to_string( num_vars_ ) );
    }
    uint32_t cur = root_;
    bool created = false;
    for ( uint32_t level = 0; level < num_vars_; ++level )
    {
      auto const branch = static_cast<uint8_t>( c.at( level ) );
      uint32_t next = nodes_[cur].c[branch];
      if ( next == npos )
      {
        next = new_node();
        nodes_[cur].c[branch] = next;
        created = true;
      }
      cur = next;
    }
    if ( !created && ( num_vars_ > 0 || cube_count_ > 0 ) )
    {
      throw std::invalid_argument( "malformed cover: duplicate cube " + c.str() );
    }
    ++cube_count_;
  }

  /*! \brief One complement-rule pass over the whole tree.
   *
   * Every node whose don't-care slot is free and whose 0- and 1-children are
   * both leaves keeps a single don't-care leaf instead.  The test precedes
   * recursion into children, and a merged node is not descended further.
   * Valid because the two merged terms are disjoint: ab XOR ab' = a.
   *
   * \return number of merges performed (the cube count drops by exactly this)
   */
  size_t merge_leaves()
  {
    return merge_leaves_rec( root_, 0 );
  }

  /*! \brief Appends `symbol` below every leaf, deepening the tree by one level.
   *
   * This is the building block rotation applies to each detached subtree;
   * every leaf gains exactly one child along the named branch.  Variable
   * bookkeeping is the caller's business while the tree is in this
   * intermediate shape.
   */
  void append_all( trit symbol )
  {
    if ( num_vars_ > 0 || cube_count_ > 0 ) /* the root of an empty 0-var tree is not a leaf */
    {
      append_all_rec( root_, symbol, num_vars_ );
    }
    ++num_vars_;
  }

  /*! \brief Cyclically shifts the variable order one position left.
   *
   * Cuts the root, appends the corresponding root symbol to every leaf of the
   * three detached subtrees, then merges them back together.  The stored cube
   * set maps to { c[1..] + c[0] : c in cubes }.
   */
  void rotate()
  {
    if ( num_vars_ == 0 )
    {
      throw std::logic_error( "cannot rotate a tree over zero variables" );
    }
    uint32_t parts[3];
    for ( uint8_t s = 0; s < 3; ++s )
    {
      parts[s] = nodes_[root_].c[s];
      nodes_[root_].c[s] = npos;
    }
    free_node( root_ );
    for ( uint8_t s = 0; s < 3; ++s )
    {
      if ( parts[s] != npos )
      {
        append_all_rec( parts[s], static_cast<trit>( s ), num_vars_ - 1 );
      }
    }
    uint32_t merged = merge_nodes( parts[1], parts[2], 0 );
    merged = merge_nodes( parts[0], merged, 0 );
    root_ = merged != npos ? merged : new_node();
    shift_ = ( shift_ + 1 ) % num_vars_;
  }

  /*! \brief All root-to-leaf paths in depth-first 0 < - < 1 order.
   *
   * Only valid once the rotation cycle is complete; otherwise the symbols
   * would be reported in a shifted variable order.
   */
  esop_cover traverse() const
  {
    if ( !var_order_is_identity() )
    {
      throw std::logic_error( "traverse requires the identity variable order; complete the rotation cycle first" );
    }
    return esop_cover( num_vars_, cubes_in_tree_order() );
  }

  /*! \brief Paths as written in the tree's own (possibly rotated) level order. */
  std::vector<cube> cubes_in_tree_order() const
  {
    std::vector<cube> out;
    out.reserve( cube_count_ );
    if ( num_vars_ == 0 )
    {
      if ( cube_count_ > 0 )
      {
        out.emplace_back( 0u );
      }
      return out;
    }
    cube scratch( num_vars_ );
    collect( root_, 0, scratch, out );
    return out;
  }

  friend ternary_tree merge_trees( ternary_tree t1, ternary_tree const& t2 );

private:
  struct node
  {
    uint32_t c[3] = { npos, npos, npos };
  };

  uint32_t new_node()
  {
    if ( !free_.empty() )
    {
      uint32_t const id = free_.back();
      free_.pop_back();
      nodes_[id] = node{};
      return id;
    }
    nodes_.push_back( node{} );
    return static_cast<uint32_t>( nodes_.size() - 1 );
  }

  void free_node( uint32_t id )
  {
    free_.push_back( id );
  }

  size_t merge_leaves_rec( uint32_t n, uint32_t level )
  {
    if ( n == npos || level >= num_vars_ )
    {
      return 0;
    }
    if ( level + 1 == num_vars_ )
    {
      /* children, if any, are leaves */
      auto& slots = nodes_[n].c;
      if ( slots[1] == npos && slots[0] != npos && slots[2] != npos )
      {
        free_node( slots[0] );
        free_node( slots[2] );
        slots[0] = npos;
        slots[2] = npos;
        uint32_t const dc_leaf = new_node();
        nodes_[n].c[1] = dc_leaf;
        --cube_count_;
        return 1;
      }
      return 0;
    }
    size_t merges = 0;
    for ( uint8_t s = 0; s < 3; ++s )
    {
      merges += merge_leaves_rec( nodes_[n].c[s], level + 1 );
    }
    return merges;
  }

  /* `depth_left` counts edges from `n` down to the current leaves. */
  void append_all_rec( uint32_t n, trit symbol, uint32_t depth_left )
  {
    if ( n == npos )
    {
      return;
    }
    if ( depth_left == 0 )
    {
      uint32_t const fresh = new_node();
      nodes_[n].c[static_cast<uint8_t>( symbol )] = fresh;
      return;
    }
    for ( uint8_t s = 0; s < 3; ++s )
    {
      append_all_rec( nodes_[n].c[s], symbol, depth_left - 1 );
    }
  }

  /* Structural union of two same-level subtrees; the right operand is
   * consumed.  Two identical full paths keep a single leaf and bump the
   * duplicate diagnostic, since silently dropping a path would be wrong. */
  uint32_t merge_nodes( uint32_t a, uint32_t b, uint32_t level )
  {
    if ( a == npos )
    {
      return b;
    }
    if ( b == npos )
    {
      return a;
    }
    if ( level == num_vars_ )
    {
      ++dup_merges_;
      --cube_count_;
      free_node( b );
      return a;
    }
    for ( uint8_t s = 0; s < 3; ++s )
    {
      uint32_t const merged = merge_nodes( nodes_[a].c[s], nodes_[b].c[s], level + 1 );
      nodes_[a].c[s] = merged;
    }
    free_node( b );
    return a;
  }

  uint32_t import_subtree( std::vector<node> const& other, uint32_t n )
  {
    if ( n == npos )
    {
      return npos;
    }
    uint32_t children[3];
    for ( uint8_t s = 0; s < 3; ++s )
    {
      children[s] = import_subtree( other, other[n].c[s] );
    }
    uint32_t const id = new_node();
    for ( uint8_t s = 0; s < 3; ++s )
    {
      nodes_[id].c[s] = children[s];
    }
    return id;
  }

  void collect( uint32_t n, uint32_t level, cube& path, std::vector<cube>& out ) const
  {
    if ( n == npos )
    {
      return;
    }
    if ( level == num_vars_ )
    {
      out.push_back( path );
      return;
    }
    for ( uint8_t s = 0; s < 3; ++s )
    {
      if ( nodes_[n].c[s] != npos )
      {
        path.set( level, static_cast<trit>( s ) );
        collect( nodes_[n].c[s], level + 1, path, out );
      }
    }
  }

  std::vector<node> nodes_;
  std::vector<uint32_t> free_;
  uint32_t root_ = npos;
  uint32_t num_vars_ = 0;
  uint32_t shift_ = 0; /* rotations performed, mod num_vars */
  size_t cube_count_ = 0;
  uint64_t dup_merges_ = 0;
};

/*! \brief Merges two whole trees of equal depth; path set becomes the union. */
inline ternary_tree merge_trees( ternary_tree t1, ternary_tree const& t2 )
{
  if ( t1.num_vars_ != t2.num_vars_ )
  {
    throw std::invalid_argument( "merge_trees requires equal depth bounds" );
  }
  assert( t1.shift_ == t2.shift_ );
  if ( t1.num_vars_ == 0 )
  {
    if ( t1.cube_count_ > 0 && t2.cube_count_ > 0 )
    {
      ++t1.dup_merges_;
    }
    else
    {
      t1.cube_count_ += t2.cube_count_;
    }
    return t1;
  }
  uint32_t const imported = t1.import_subtree( t2.nodes_, t2.root_ );
  t1.cube_count_ += t2.cube_count_;
  t1.dup_merges_ += t2.dup_merges_;
  t1.root_ = t1.merge_nodes( t1.root_, imported, 0 );
  return t1;
}

/*! \brief TT-LITE: complement-rule ESOP minimization via tree rotation.
 *
 * Performs exactly `num_vars` iterations of (merge_leaves; rotate), so every
 * variable spends one pass at the bottom level, then a trailing merge_leaves
 * harvests reductions exposed by the final rotation.  The variable order is
 * back to the identity when the loop ends, so the output cubes read in the
 * original order.  Output is XOR-equivalent to the input and never larger.
 */
inline esop_cover minimize( esop_cover const& cover )
{
  ternary_tree tree( cover );
  for ( uint32_t i = 0; i < cover.num_vars; ++i )
  {
    tree.merge_leaves();
    tree.rotate();
  }
  tree.merge_leaves();
  return tree.traverse();
}

} /* namespace qimg */
