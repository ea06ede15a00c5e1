class Scheme:
    """Drawing configuration shared by the SVG, DOT and HTML outputs. Attributes may be overridden by keyword."""

    def __init__(self, **kwargs):
        self.canvas_width = 800
        self.canvas_height = 800
        self.margin = 24

        self.background_fill = 'white'
        self.border_fill = 'white'
        self.axis_line_color = 'darkgrey'
        self.grid_line_color = '#eeeeee'
        self.body_background_color = 'white'
        self.text_color = '#222222'
        self.headline_color = '#555555'
        self.show_headline = True

        # interval classes: (0,1) solid, (1,inf) dashed, (inf,0) double stroke
        self.decoration_color = {
            'int01': '#d62728',
            'int1Inf': '#1f77b4',
            'intNeg': '#2ca02c',
        }
        self.decoration_linestyle = {
            'int01': '-',
            'int1Inf': '--',
            'intNeg': '=',
        }
        self.line_width = 1.5
        # width of the background stripe inside a double stroke
        self.double_line_gap = 1.5
        self.show_arrows = True
        self.arrow_size = 6

        self.vertex_radius = 4
        self.vertex_line_color = 'black'
        self.vertex_fill = {
            'over0': 'black',
            'over1': 'white',
            'overInf': 0.6,
        }
        self.dessin_edge_color = '#222222'
        self.dessin_line_width = 2.0

        # visible part of the h-plane for traced curves
        self.trace_x_range = (-12.0, 8.0)
        self.trace_y_range = (-10.0, 10.0)
        self.trace_clip = 1e3

        self.table_color_even = '#f4f4f4'
        self.table_color_odd = '#ffffff'
        self.table_header_color = '#cccccc'
        self.tag_pre_background_color = 'lightgrey'

        self.plot_sizing_mode = 'fixed'
        self.toolbar_location = 'right'

        for name, value in kwargs.items():
            if not hasattr(self, name):
                raise AttributeError(f'Unknown scheme attribute "{name}"')
            setattr(self, name, value)
