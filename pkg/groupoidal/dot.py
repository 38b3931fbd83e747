# Copyright (C) 2026 The groupoidal developers.
#
# DOT rendering of groupoids and action graphs.

import jinja2

_environment = jinja2.Environment(
    autoescape=False,
    keep_trailing_newline=True,
    trim_blocks=True,
    lstrip_blocks=True)
_environment.filters['quote'] = \
    lambda s: '"{}"'.format(str(s).replace('\\', '\\\\').replace('"', '\\"'))

GROUPOID_TEMPLATE = _environment.from_string("""\
digraph {{ name|quote }} {
  node [shape=box];
{% for node in nodes %}
  n{{ node.id }} [label={{ node.label|quote }}];
{% endfor %}
{% for edge in edges %}
  n{{ edge.src }} -> n{{ edge.dst }} [label={{ edge.label|quote }}];
{% endfor %}
}
""")

ACTION_TEMPLATE = _environment.from_string("""\
digraph {{ name|quote }} {
  node [shape=ellipse];
{% for node in nodes %}
  p{{ node.id }} [label={{ node.label|quote }}{{ node.extra }}];
{% endfor %}
{% for edge in edges %}
  p{{ edge.src }} -> p{{ edge.dst }} [label={{ edge.label|quote }}];
{% endfor %}
}
""")


def groupoid_dot(groupoid):
    """Objects as boxes, one labelled edge per arrow (identities loop)."""
    nodes = [{'id': i, 'label': label}
             for i, label in enumerate(groupoid.objects)]
    edges = [{'src': groupoid.source(a), 'dst': groupoid.target(a),
              'label': groupoid.labels[a]} for a in groupoid.arrows]
    return GROUPOID_TEMPLATE.render(name=groupoid.name, nodes=nodes,
                                    edges=edges)


def action_graph_dot(graph):
    """Points as ellipses (the base point doubled), one edge x -(s)-> s.x
    per defined action."""
    action = graph.action
    semigroup = action.semigroup
    nodes = [{'id': i, 'label': label,
              'extra': ', peripheries=2' if i == action.base else ''}
             for i, label in enumerate(action.points)]
    edges = [{'src': x, 'dst': y, 'label': semigroup.label(s)}
             for (x, s, y) in graph.edges]
    return ACTION_TEMPLATE.render(name=action.name, nodes=nodes, edges=edges)


def export_dot(thing):
    """DOT text for a FiniteGroupoid or an ActionGraph."""
    if hasattr(thing, 'edges') and hasattr(thing, 'action'):
        return action_graph_dot(thing)
    return groupoid_dot(thing)
