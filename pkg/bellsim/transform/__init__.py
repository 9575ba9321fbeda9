# Circle arithmetic and the frame-to-frame transformation law
