from .main import analyze_mesh
