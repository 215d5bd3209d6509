"""Writers and readers of sampled surface patches."""
import csv
import json
import numpy as np
from .._errors import UnsupportedProjectionError


# the export formats and their usual file suffixes
FORMATS = {'ply': '.ply', 'obj': '.obj', 'csv': '.csv', 'curvature-json': '.json'}


# the names of the ambient coordinates in projection strings
_AXES = 'xyzw'


# curvature fields attached to exports when a patch carries them
_CURVATURE_FIELDS = ('K', 'kappa', 'nu', 'mu')


def _number(value):
    """Format a float with 17 significant digits."""
    return '{:.17g}'.format(value)


def format_for_path(path):
    """Return the export format implied by a file suffix."""
    for name, suffix in FORMATS.items():
        if str(path).lower().endswith(suffix):
            return name
    raise ValueError('cannot infer an export format from {!r}'.format(path))


def _projection_axes(projection, dim):
    """
    Resolve a projection string into kept and dropped coordinate indices.

    Args:
        projection (str): three letters of 'xyzw'
        dim (int): the ambient dimension of the patch

    Returns:
        tuple: the kept indices and the dropped indices

    """
    if projection in (None, 'none'):
        raise UnsupportedProjectionError('mesh formats need a 3D projection')
    if len(projection) != 3 or any(axis not in _AXES[:dim] for axis in projection):
        msg = 'projection {!r} does not select 3 of the axes {!r}'
        raise UnsupportedProjectionError(msg.format(projection, _AXES[:dim]))
    kept = [_AXES.index(axis) for axis in projection]
    dropped = [index for index in range(dim) if index not in kept]
    return kept, dropped


def _triangles(grid):
    """Yield counterclockwise triangles splitting every grid quad."""
    for row in range(grid.rows - 1):
        for col in range(grid.cols - 1):
            a = row * grid.cols + col
            b, c, d = a + 1, a + grid.cols + 1, a + grid.cols
            yield a, b, c
            yield a, c, d


def write_ply(patch, projection, path):
    """
    Write a patch as an ASCII PLY mesh.

    When the projection drops a coordinate it is attached as the vertex
    property w, together with gauss_k and normal_k if the patch carries them.

    Args:
        patch (SurfacePatch): the patch
        projection (str): three letters of 'xyzw'
        path (str): the output path

    Returns:
        None

    """
    kept, dropped = _projection_axes(projection, patch.dim)
    points = patch.points.reshape(-1, patch.dim)
    columns = [points[:, index] for index in kept]
    names = ['x', 'y', 'z']
    if dropped:
        columns.append(points[:, dropped[0]])
        names.append('w')
        for field, name in (('K', 'gauss_k'), ('kappa', 'normal_k')):
            if field in patch.fields:
                columns.append(patch.fields[field].ravel())
                names.append(name)
    faces = list(_triangles(patch.grid))
    with open(path, 'w') as stream:
        stream.write('ply\nformat ascii 1.0\n')
        stream.write('element vertex {}\n'.format(len(points)))
        for name in names:
            stream.write('property float {}\n'.format(name))
        stream.write('element face {}\n'.format(len(faces)))
        stream.write('property list uchar int vertex_indices\nend_header\n')
        for row in zip(*columns):
            stream.write(' '.join(_number(value) for value in row) + '\n')
        for face in faces:
            stream.write('3 {} {} {}\n'.format(*face))


def read_ply(path):
    """
    Read an ASCII PLY mesh written by write_ply.

    Args:
        path (str): the input path

    Returns:
        tuple: a dict of vertex property arrays and the (n, 3) face array

    """
    with open(path) as stream:
        lines = stream.read().splitlines()
    names = []
    vertices = faces = 0
    body = None
    for number, line in enumerate(lines):
        parts = line.split()
        if parts[:2] == ['element', 'vertex']:
            vertices = int(parts[2])
        elif parts[:2] == ['element', 'face']:
            faces = int(parts[2])
        elif parts[:2] == ['property', 'float']:
            names.append(parts[2])
        elif line == 'end_header':
            body = number + 1
            break
    if body is None:
        raise ValueError('PLY file {} has no end_header'.format(path))
    rows = np.array([[float(value) for value in line.split()]
                     for line in lines[body:body + vertices]]).reshape(vertices, len(names))
    face_rows = np.array([[int(value) for value in line.split()[1:]]
                          for line in lines[body + vertices:body + vertices + faces]], dtype=int)
    return {name: rows[:, index] for index, name in enumerate(names)}, face_rows


def write_obj(patch, projection, path):
    """Write a patch as a Wavefront OBJ mesh with 1-based faces."""
    kept, _ = _projection_axes(projection, patch.dim)
    points = patch.points.reshape(-1, patch.dim)[:, kept]
    with open(path, 'w') as stream:
        for point in points:
            stream.write('v ' + ' '.join(_number(value) for value in point) + '\n')
        for face in _triangles(patch.grid):
            stream.write('f {} {} {}\n'.format(*(index + 1 for index in face)))


def _node_fields(patch):
    """Return the names of the curvature fields a patch carries."""
    return [name for name in _CURVATURE_FIELDS if name in patch.fields]


def write_csv(patch, path):
    """
    Write every node as a CSV row of u, v, coordinates, E and fields.

    Args:
        patch (SurfacePatch): the patch
        path (str): the output path

    Returns:
        None

    """
    fields = _node_fields(patch)
    coordinates = ['x{}'.format(index + 1) for index in range(patch.dim)]
    t = patch.grid.points()
    with open(path, 'w', newline='') as stream:
        writer = csv.writer(stream)
        writer.writerow(['u', 'v'] + coordinates + ['E'] + fields)
        for index in np.ndindex(*patch.grid.shape):
            values = [t[index].real, t[index].imag]
            values.extend(patch.points[index])
            values.append(patch.E[index])
            values.extend(patch.fields[name][index] for name in fields)
            writer.writerow([_number(value) for value in values])


def read_csv(path):
    """
    Read a CSV written by write_csv.

    Args:
        path (str): the input path

    Returns:
        dict: one float array per column

    """
    with open(path, newline='') as stream:
        reader = csv.reader(stream)
        header = next(reader)
        rows = np.array([[float(value) for value in row] for row in reader])
    return {name: rows[:, index] for index, name in enumerate(header)}


def write_curvature_json(patch, path):
    """
    Write the grid and the per node position and curvature data as JSON.

    Args:
        patch (SurfacePatch): a patch carrying the K, kappa, nu and mu fields
        path (str): the output path

    Returns:
        None

    """
    missing = [name for name in _CURVATURE_FIELDS if name not in patch.fields]
    if missing:
        raise ValueError('patch lacks the curvature fields {}'.format(missing))
    grid = patch.grid
    nodes = []
    for index in np.ndindex(*grid.shape):
        node = {'x': [float(value) for value in patch.points[index]]}
        for name in _CURVATURE_FIELDS:
            node[name] = float(patch.fields[name][index])
        node['E'] = float(patch.E[index])
        nodes.append(node)
    document = {
        'grid': {'u0': grid.u0, 'v0': grid.v0, 'h': grid.h,
                 'rows': grid.rows, 'cols': grid.cols},
        'nodes': nodes,
    }
    with open(path, 'w') as stream:
        json.dump(document, stream, indent=1)


def export(patch, fmt, projection, path):
    """
    Write a patch in one of the export formats.

    Args:
        patch (SurfacePatch): the patch
        fmt (str): 'ply', 'obj', 'csv' or 'curvature-json'
        projection (str): three letters of 'xyzw' (mesh formats only)
        path (str): the output path

    Returns:
        None

    """
    if fmt == 'ply':
        write_ply(patch, projection, path)
    elif fmt == 'obj':
        write_obj(patch, projection, path)
    elif fmt == 'csv':
        write_csv(patch, path)
    elif fmt == 'curvature-json':
        write_curvature_json(patch, path)
    else:
        raise ValueError('unknown export format: {!r}'.format(fmt))


# explicitly define the outward facing API of this module
__all__ = [
    format_for_path.__name__,
    write_ply.__name__,
    read_ply.__name__,
    write_obj.__name__,
    write_csv.__name__,
    read_csv.__name__,
    write_curvature_json.__name__,
    export.__name__,
]
